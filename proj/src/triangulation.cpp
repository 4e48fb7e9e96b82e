#include "hstlab/triangulation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hstlab/combinatorics.hpp"
#include "hstlab/geometry.hpp"

namespace hstlab {

namespace {

void check_shape(int n, int d, const std::vector<Simplex>& simplices)
{
    if (d < 1 || n < d + 1 || n > kMaxLabel)
        throw std::invalid_argument("triangulation: need 1 <= d < n <= " + std::to_string(kMaxLabel));
    for (Simplex s : simplices) {
        if (s.size() != d + 1)
            throw std::invalid_argument("triangulation: " + s.to_string() + " is not a " + std::to_string(d) + "-simplex");
        if (s.max_label() > n) throw std::invalid_argument("triangulation: " + s.to_string() + " exceeds n");
    }
    for (std::size_t i = 1; i < simplices.size(); ++i)
        if (simplices[i] == simplices[i - 1])
            throw std::invalid_argument("triangulation: duplicate simplex " + simplices[i].to_string());
}

} // namespace

Triangulation::Triangulation(int n, int d, std::vector<Simplex> simplices)
    : n_(n), d_(d), simplices_(std::move(simplices))
{
    std::sort(simplices_.begin(), simplices_.end());
    check_shape(n_, d_, simplices_);
}

bool Triangulation::contains(Simplex s) const
{
    return std::binary_search(simplices_.begin(), simplices_.end(), s);
}

LabelSet Triangulation::used_labels() const
{
    LabelSet all;
    for (Simplex s : simplices_) all = all | s;
    return all;
}

std::string Triangulation::to_json() const
{
    nlohmann::ordered_json j;
    j["n"] = n_;
    j["d"] = d_;
    auto list = nlohmann::ordered_json::array();
    for (Simplex s : simplices_) list.push_back(s.labels());
    j["simplices"] = std::move(list);
    return j.dump();
}

Triangulation Triangulation::from_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    std::vector<Simplex> simplices;
    for (const auto& s : j.at("simplices")) {
        const auto labels = s.get<std::vector<int>>();
        simplices.push_back(LabelSet::from_labels(labels));
    }
    return Triangulation(j.at("n").get<int>(), j.at("d").get<int>(), std::move(simplices));
}

std::strong_ordering operator<=>(const Triangulation& a, const Triangulation& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.simplices_.begin(), a.simplices_.end(), b.simplices_.begin(),
                                                  b.simplices_.end());
}

std::size_t TriangulationHash::operator()(const Triangulation& t) const noexcept
{
    std::size_t h = static_cast<std::size_t>(t.n()) * 31u + static_cast<std::size_t>(t.d());
    for (Simplex s : t.simplices()) h = h * 1000003u ^ s.mask();
    return h;
}

const char* to_string(Violation v) noexcept
{
    switch (v) {
    case Violation::Shape: return "shape";
    case Violation::NotAdmissible: return "not-admissible";
    case Violation::FaceCoverage: return "face-coverage";
    case Violation::Volume: return "volume";
    case Violation::UnusedLabel: return "unused-label";
    }
    return "?";
}

ValidationReport validate(const std::vector<Simplex>& candidate, int n, int d)
{
    ValidationReport report;
    auto fail = [&](Violation kind, std::vector<Simplex> witness, std::string message) {
        report.violations.push_back({kind, std::move(witness), std::move(message)});
    };
    if (d < 1 || n < d + 1 || n > kMaxLabel) {
        fail(Violation::Shape, {}, "ambient C(" + std::to_string(n) + "," + std::to_string(d) + ") out of range");
        return report;
    }

    std::vector<Simplex> simplices = candidate;
    std::sort(simplices.begin(), simplices.end());
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const Simplex s = simplices[i];
        if (s.size() != d + 1 || s.max_label() > n) {
            fail(Violation::Shape, {s}, s.to_string() + " is not a d-simplex of C(n,d)");
            return report;
        }
        if (i > 0 && simplices[i - 1] == s) {
            fail(Violation::Shape, {s}, "duplicate simplex " + s.to_string());
            return report;
        }
    }

    [&] {
        for (std::size_t i = 0; i < simplices.size(); ++i)
            for (std::size_t j = i + 1; j < simplices.size(); ++j)
                if (!zig_zag_admissible(simplices[i], simplices[j], d)) {
                    fail(Violation::NotAdmissible, {simplices[i], simplices[j]},
                         simplices[i].to_string() + " and " + simplices[j].to_string() + " are not admissible");
                    return;
                }
    }();

    std::map<Simplex, int> face_count;
    for (Simplex s : simplices) s.for_each([&](int v) { ++face_count[s.without(v)]; });
    std::map<Simplex, FacetClass> boundary;
    for (const auto& f : gale_facets(n, d)) boundary.emplace(f.facet, f.cls);
    [&] {
        for (const auto& [face, count] : face_count) {
            const bool on_boundary = boundary.count(face) > 0;
            if (count > 2 || (count == 2 && on_boundary) || (count == 1 && !on_boundary)) {
                fail(Violation::FaceCoverage, {face},
                     "face " + face.to_string() + " lies in " + std::to_string(count) + " simplices" +
                         (on_boundary ? " but is a boundary facet" : ""));
                return;
            }
        }
        for (const auto& [facet, cls] : boundary)
            if (face_count.count(facet) == 0) {
                fail(Violation::FaceCoverage, {facet}, "boundary facet " + facet.to_string() + " is not covered");
                return;
            }
    }();

    mpz_class volume = 0;
    for (Simplex s : simplices) volume += normalized_volume(s, d);
    const mpz_class expected = hull_volume(LabelSet::range(1, n), d);
    if (volume != expected)
        fail(Violation::Volume, {}, "volume " + volume.get_str() + " differs from hull volume " + expected.get_str());

    if (d >= 2) {
        LabelSet used;
        for (Simplex s : simplices) used = used | s;
        const LabelSet missing = LabelSet::range(1, n) - used;
        if (!missing.empty())
            fail(Violation::UnusedLabel, {missing}, "vertices " + missing.to_string() + " are not used");
    }
    return report;
}

ValidationReport validate(const Triangulation& t)
{
    return validate(t.simplices(), t.n(), t.d());
}

std::vector<Simplex> bottom_simplices(LabelSet vertices, int d)
{
    return gale_facets_of(vertices, d + 1, FacetClass::Lower);
}

std::vector<Simplex> top_simplices(LabelSet vertices, int d)
{
    return gale_facets_of(vertices, d + 1, FacetClass::Upper);
}

Triangulation bottom(int n, int d)
{
    return Triangulation(n, d, bottom_simplices(LabelSet::range(1, n), d));
}

Triangulation top(int n, int d)
{
    return Triangulation(n, d, top_simplices(LabelSet::range(1, n), d));
}

namespace {

bool all_in(const Triangulation& t, const std::vector<Simplex>& facets)
{
    return std::all_of(facets.begin(), facets.end(), [&](Simplex f) { return t.contains(f); });
}

Triangulation exchange(const Triangulation& t, const std::vector<Simplex>& remove, const std::vector<Simplex>& add)
{
    std::vector<Simplex> out;
    out.reserve(t.size() - remove.size() + add.size());
    for (Simplex s : t.simplices())
        if (std::find(remove.begin(), remove.end(), s) == remove.end()) out.push_back(s);
    out.insert(out.end(), add.begin(), add.end());
    return Triangulation(t.n(), t.d(), std::move(out));
}

} // namespace

std::vector<Simplex> increasing_flips(const Triangulation& t)
{
    std::vector<Simplex> out;
    for (Simplex s : subsets_of_size(t.n(), t.d() + 2))
        if (all_in(t, simplex_facet_split(s).lower)) out.push_back(s);
    return out;
}

std::vector<Simplex> decreasing_flips(const Triangulation& t)
{
    std::vector<Simplex> out;
    for (Simplex s : subsets_of_size(t.n(), t.d() + 2))
        if (all_in(t, simplex_facet_split(s).upper)) out.push_back(s);
    return out;
}

Triangulation apply_flip(const Triangulation& t, Simplex flip)
{
    if (flip.size() != t.d() + 2 || flip.max_label() > t.n())
        throw std::invalid_argument("apply_flip: " + flip.to_string() + " is not a (d+1)-simplex");
    const FacetSplit split = simplex_facet_split(flip);
    if (!all_in(t, split.lower))
        throw std::invalid_argument("apply_flip: " + flip.to_string() + " is not an increasing flip");
    return exchange(t, split.lower, split.upper);
}

Triangulation apply_decreasing_flip(const Triangulation& t, Simplex flip)
{
    if (flip.size() != t.d() + 2 || flip.max_label() > t.n())
        throw std::invalid_argument("apply_decreasing_flip: " + flip.to_string() + " is not a (d+1)-simplex");
    const FacetSplit split = simplex_facet_split(flip);
    if (!all_in(t, split.upper))
        throw std::invalid_argument("apply_decreasing_flip: " + flip.to_string() + " is not a decreasing flip");
    return exchange(t, split.upper, split.lower);
}

std::vector<LabelSet> maximal_faces(std::vector<LabelSet> faces)
{
    std::sort(faces.begin(), faces.end(), [](LabelSet a, LabelSet b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<LabelSet> kept;
    for (LabelSet f : faces)
        if (std::none_of(kept.begin(), kept.end(), [&](LabelSet k) { return f.is_subset_of(k); })) kept.push_back(f);
    std::sort(kept.begin(), kept.end());
    return kept;
}

namespace {

Triangulation from_maximal_faces(int n, int d, std::vector<LabelSet> faces, const char* map_name)
{
    std::vector<LabelSet> maximal = maximal_faces(std::move(faces));
    for (LabelSet f : maximal)
        if (f.size() != d + 1)
            throw std::logic_error(std::string(map_name) + ": lower-dimensional maximal face " + f.to_string());
    return Triangulation(n, d, std::move(maximal));
}

} // namespace

Triangulation contract_last(const Triangulation& t)
{
    const int n = t.n();
    const int d = t.d();
    if (n < d + 2) throw std::invalid_argument("contract_last: need n >= d + 2");
    std::vector<LabelSet> faces;
    for (Simplex s : t.simplices()) {
        if (!s.contains(n)) {
            faces.push_back(s);  // del_T(n)
            continue;
        }
        // del_T(n) keeps S \ {n}; if n-1 is in S the join term yields the
        // same degenerate face, otherwise it yields (S \ {n}) ∪ {n-1}.
        const LabelSet link = s.without(n);
        faces.push_back(link);
        if (!link.contains(n - 1)) faces.push_back(link.with(n - 1));
    }
    return from_maximal_faces(n - 1, d, std::move(faces), "contract_last");
}

Triangulation insert_i(const Triangulation& t)
{
    const int n = t.n() + 1;
    const int d = t.d();
    std::vector<LabelSet> faces(t.simplices().begin(), t.simplices().end());
    for (Simplex s : bottom_simplices(LabelSet::range(1, n), d))
        if (s.contains(n)) faces.push_back(s);
    return from_maximal_faces(n, d, std::move(faces), "insert_i");
}

Triangulation insert_j(const Triangulation& t)
{
    const int n = t.n() + 1;
    const int d = t.d();
    const int old_last = n - 1;
    std::vector<LabelSet> faces;
    for (Simplex s : t.simplices()) {
        if (!s.contains(old_last)) {
            faces.push_back(s);
            continue;
        }
        const LabelSet link = s.without(old_last);
        faces.push_back(link);          // del_T(n-1)
        faces.push_back(link.with(n));  // lk_T(n-1) * {n}
    }
    const LabelSet last_edge{n - 1, n};
    for (Simplex s : top_simplices(LabelSet::range(1, n), d))
        if (last_edge.is_subset_of(s)) faces.push_back(s);
    return from_maximal_faces(n, d, std::move(faces), "insert_j");
}

const char* to_string(Color c) noexcept
{
    return c == Color::Green ? "green" : "red";
}

Simplex special_simplex(int n, int d)
{
    return LabelSet::range(n - d, n);
}

Color color(const Triangulation& t)
{
    const bool has_s0 = t.contains(special_simplex(t.n(), t.d()));
    const bool green = t.d() % 2 == 0 ? !has_s0 : has_s0;
    return green ? Color::Green : Color::Red;
}

std::vector<Simplex> submersion_set_geometric(const Triangulation& t, int i)
{
    if (i < 0 || i > t.d()) throw std::invalid_argument("submersion_set: need 0 <= i <= d");
    std::vector<Simplex> out;
    for (Simplex sigma : subsets_of_size(t.n(), i + 1))
        if (submerged(sigma, t.simplices(), t.d())) out.push_back(sigma);
    return out;
}

bool has_combinatorial_submersion(int d, int i) noexcept
{
    return (d == 2 && i == 1) || (d == 3 && i == 2);
}

std::vector<Simplex> submersion_set_combinatorial(const Triangulation& t, int i)
{
    if (!has_combinatorial_submersion(t.d(), i))
        throw std::invalid_argument("no combinatorial submersion criterion for this (d, i)");
    std::vector<LabelSet> edges;
    for (Simplex s : t.simplices())
        for (LabelSet e : subsets_of_size(s, 2)) edges.push_back(e);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<Simplex> out;
    for (Simplex sigma : subsets_of_size(t.n(), i + 1)) {
        const std::vector<int> v = sigma.labels();
        // d = 2, sigma = {a, b}: foiled by an edge {k, l} with k < a < l < b.
        // d = 3, sigma = {a, b, c}: foiled by an edge {x, y} with a < x < b < y < c.
        const bool foiled = std::any_of(edges.begin(), edges.end(), [&](LabelSet e) {
            const int lo = e.min_label();
            const int hi = e.max_label();
            if (i == 1) return lo < v[0] && v[0] < hi && hi < v[1];
            return v[0] < lo && lo < v[1] && v[1] < hi && hi < v[2];
        });
        if (!foiled) out.push_back(sigma);
    }
    return out;
}

std::vector<Simplex> submersion_set(const Triangulation& t, int i)
{
    return has_combinatorial_submersion(t.d(), i) ? submersion_set_combinatorial(t, i)
                                                   : submersion_set_geometric(t, i);
}

} // namespace hstlab
