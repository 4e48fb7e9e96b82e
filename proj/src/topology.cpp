#include "hstlab/topology.hpp"

#include <algorithm>
#include <numeric>
#include <span>

#include <nlohmann/json.hpp>

namespace hstlab {

namespace {

std::size_t uz(int x)
{
    return static_cast<std::size_t>(x);
}

void sort_faces(std::vector<int>& flat, std::size_t width)
{
    const std::size_t count = flat.size() / width;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(flat.begin() + static_cast<std::ptrdiff_t>(a * width),
                                            flat.begin() + static_cast<std::ptrdiff_t>((a + 1) * width),
                                            flat.begin() + static_cast<std::ptrdiff_t>(b * width),
                                            flat.begin() + static_cast<std::ptrdiff_t>((b + 1) * width));
    });
    std::vector<int> sorted;
    sorted.reserve(flat.size());
    for (std::size_t i : order)
        sorted.insert(sorted.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * width),
                      flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * width));
    flat = std::move(sorted);
}

} // namespace

OrderComplex OrderComplex::of(const FinitePoset& p, std::size_t face_budget)
{
    OrderComplex k;
    std::size_t total = 0;
    std::vector<int> chain;
    std::vector<Bitset> strictly_above(uz(p.size()));
    for (int x = 0; x < p.size(); ++x) {
        strictly_above[uz(x)] = p.up_set(x);
        strictly_above[uz(x)].reset(uz(x));
    }

    auto record = [&]() {
        const std::size_t dim = chain.size() - 1;
        if (k.faces_.size() <= dim) k.faces_.resize(dim + 1);
        k.faces_[dim].insert(k.faces_[dim].end(), chain.begin(), chain.end());
        if (++total > face_budget)
            throw ResourceLimitExceeded("order complex exceeded the budget of " + std::to_string(face_budget) +
                                        " faces while listing dimension " + std::to_string(dim));
    };
    auto extend = [&](auto&& self, int top) -> void {
        const Bitset& above = strictly_above[uz(top)];
        for (auto y = above.find_first(); y != Bitset::npos; y = above.find_next(y)) {
            chain.push_back(static_cast<int>(y));
            record();
            self(self, static_cast<int>(y));
            chain.pop_back();
        }
    };
    for (int x = 0; x < p.size(); ++x) {
        chain.assign(1, x);
        record();
        extend(extend, x);
    }
    for (std::size_t d = 0; d < k.faces_.size(); ++d) sort_faces(k.faces_[d], d + 1);
    return k;
}

std::size_t OrderComplex::face_count(int k) const
{
    if (k == -1) return 1;
    if (k < -1 || k > dimension()) return 0;
    return faces_[uz(k)].size() / (uz(k) + 1);
}

std::vector<std::size_t> OrderComplex::face_counts() const
{
    std::vector<std::size_t> out;
    for (int k = 0; k <= dimension(); ++k) out.push_back(face_count(k));
    return out;
}

std::size_t OrderComplex::total_faces() const
{
    std::size_t total = 0;
    for (int k = 0; k <= dimension(); ++k) total += face_count(k);
    return total;
}

std::vector<int> OrderComplex::face(int k, std::size_t i) const
{
    const std::size_t w = uz(k) + 1;
    const auto& flat = faces_.at(uz(k));
    return {flat.begin() + static_cast<std::ptrdiff_t>(i * w), flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * w)};
}

std::optional<std::size_t> OrderComplex::find(const std::vector<int>& chain) const
{
    if (chain.empty() || static_cast<int>(chain.size()) - 1 > dimension()) return std::nullopt;
    const std::size_t w = chain.size();
    const auto& flat = faces_[w - 1];
    std::size_t lo = 0;
    std::size_t hi = flat.size() / w;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const auto first = flat.begin() + static_cast<std::ptrdiff_t>(mid * w);
        if (std::lexicographical_compare(first, first + static_cast<std::ptrdiff_t>(w), chain.begin(), chain.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == flat.size() / w) return std::nullopt;
    const auto first = flat.begin() + static_cast<std::ptrdiff_t>(lo * w);
    if (!std::equal(chain.begin(), chain.end(), first)) return std::nullopt;
    return lo;
}

std::int64_t OrderComplex::reduced_euler_characteristic() const
{
    std::int64_t chi = -1;
    for (int k = 0; k <= dimension(); ++k) {
        const auto f = static_cast<std::int64_t>(face_count(k));
        chi += (k % 2 == 0) ? f : -f;
    }
    return chi;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

std::vector<mpz_class> dense_smith_diagonal(std::vector<std::vector<mpz_class>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pr = rows;
        std::size_t pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                // A nonzero remainder is smaller than the pivot: move it to (t, t).
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < abs(a[t][t])) std::swap(a[t], a[i]);
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < abs(a[t][t]))
                        for (auto& row : a) std::swap(row[t], row[j]);
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                        for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

// target - factor * source; false on int64 overflow.
bool axpy(const SparseColumn& target, std::int64_t factor, const SparseColumn& source, SparseColumn& out)
{
    out.clear();
    out.reserve(target.size() + source.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
            out.push_back(target[i++]);
            continue;
        }
        std::int64_t v = 0;
        if (__builtin_mul_overflow(factor, source[j].second, &v)) return false;
        const int row = source[j].first;
        const std::int64_t base = (i < target.size() && target[i].first == row) ? target[i++].second : 0;
        if (__builtin_sub_overflow(base, v, &v)) return false;
        ++j;
        if (v != 0) out.emplace_back(row, v);
    }
    return true;
}

std::int64_t entry(const SparseColumn& c, int row)
{
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
    return (it != c.end() && it->first == row) ? it->second : 0;
}

} // namespace

SmithInvariants smith_invariants(std::vector<SparseColumn> columns, int rows)
{
    SmithInvariants result;
    const std::size_t m = columns.size();
    std::vector<char> active(m, 1);
    std::vector<std::vector<int>> row_columns(uz(rows));
    for (std::size_t c = 0; c < m; ++c)
        for (auto [r, v] : columns[c]) row_columns[uz(r)].push_back(static_cast<int>(c));

    // Unit pivots: column operations clear the pivot row, after which the
    // pivot row and column split off as a 1x1 block.
    bool overflow = false;
    SparseColumn scratch;
    for (bool progress = true; progress && !overflow;) {
        progress = false;
        for (std::size_t c = 0; c < m && !overflow; ++c) {
            if (!active[c] || columns[c].empty()) continue;
            int pivot_row = -1;
            std::int64_t pivot_value = 0;
            for (auto [r, v] : columns[c])
                if ((v == 1 || v == -1) &&
                    (pivot_row < 0 || row_columns[uz(r)].size() < row_columns[uz(pivot_row)].size())) {
                    pivot_row = r;
                    pivot_value = v;
                }
            if (pivot_row < 0) continue;
            const std::vector<int> users = row_columns[uz(pivot_row)];
            for (int other : users) {
                const std::size_t o = uz(other);
                if (o == c || !active[o]) continue;
                const std::int64_t a = entry(columns[o], pivot_row);
                if (a == 0) continue;
                if (!axpy(columns[o], a * pivot_value, columns[c], scratch)) {
                    overflow = true;
                    break;
                }
                for (auto [r, v] : scratch)
                    if (entry(columns[o], r) == 0) row_columns[uz(r)].push_back(other);
                std::swap(columns[o], scratch);
            }
            if (overflow) break;
            active[c] = 0;
            row_columns[uz(pivot_row)].clear();
            ++result.rank;
            progress = true;
        }
    }

    // Whatever is left goes through a dense big-integer elimination.
    std::vector<std::size_t> rest;
    std::vector<int> rest_rows;
    for (std::size_t c = 0; c < m; ++c) {
        if (!active[c] || columns[c].empty()) continue;
        rest.push_back(c);
        for (auto [r, v] : columns[c]) rest_rows.push_back(r);
    }
    std::sort(rest_rows.begin(), rest_rows.end());
    rest_rows.erase(std::unique(rest_rows.begin(), rest_rows.end()), rest_rows.end());
    if (!rest.empty()) {
        std::vector<std::vector<mpz_class>> dense(rest_rows.size(), std::vector<mpz_class>(rest.size()));
        for (std::size_t j = 0; j < rest.size(); ++j)
            for (auto [r, v] : columns[rest[j]]) {
                const auto i = static_cast<std::size_t>(
                    std::lower_bound(rest_rows.begin(), rest_rows.end(), r) - rest_rows.begin());
                dense[i][j] = mpz_class(static_cast<long>(v));
            }
        for (const mpz_class& g : dense_smith_diagonal(std::move(dense))) {
            ++result.rank;
            if (g > 1) result.torsion.push_back(g);
        }
        std::sort(result.torsion.begin(), result.torsion.end());
    }
    return result;
}

// ---------------------------------------------------------------------------
// Homology

HomologyGroup HomologyResult::at(int k) const
{
    auto it = groups.find(k);
    return it == groups.end() ? HomologyGroup{} : it->second;
}

bool HomologyResult::acyclic() const
{
    return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.second.trivial(); });
}

std::optional<int> HomologyResult::sphere_dimension() const
{
    std::optional<int> found;
    for (const auto& [k, g] : groups) {
        if (g.trivial()) continue;
        if (found || g.betti != 1 || !g.torsion.empty()) return std::nullopt;
        found = k;
    }
    return found;
}

bool HomologyResult::same_as(const HomologyResult& other) const
{
    return shifted_equals(other, 0);
}

bool HomologyResult::shifted_equals(const HomologyResult& other, int shift) const
{
    for (const auto& [k, g] : groups)
        if (!(g == other.at(k + shift))) return false;
    for (const auto& [k, g] : other.groups)
        if (!(g == at(k - shift))) return false;
    return true;
}

std::string HomologyResult::describe() const
{
    if (auto k = sphere_dimension()) return "S^" + std::to_string(*k);
    if (acyclic()) return "acyclic";
    std::string out;
    for (const auto& [k, g] : groups) {
        if (g.trivial()) continue;
        if (!out.empty()) out += ' ';
        out += "H" + std::to_string(k) + "=";
        std::string part;
        if (g.betti > 0) part = g.betti == 1 ? "Z" : "Z^" + std::to_string(g.betti);
        for (const auto& t : g.torsion) part += (part.empty() ? "" : "+") + std::string("Z/") + t.get_str();
        out += part;
    }
    return out;
}

std::string HomologyResult::to_json(std::optional<std::int64_t> mobius) const
{
    nlohmann::ordered_json j;
    nlohmann::ordered_json dims = nlohmann::ordered_json::object();
    for (const auto& [k, g] : groups) {
        nlohmann::ordered_json entry;
        entry["betti"] = g.betti;
        auto torsion = nlohmann::ordered_json::array();
        for (const auto& t : g.torsion) torsion.push_back(t.get_str());
        entry["torsion"] = std::move(torsion);
        dims[std::to_string(k)] = std::move(entry);
    }
    j["dims"] = std::move(dims);
    j["euler"] = euler;
    if (mobius) j["mobius_crosscheck"] = *mobius;
    return j.dump();
}

HomologyResult homology(const OrderComplex& k)
{
    const int top = k.dimension();
    // ranks[q] = rank of the boundary map from q-faces to (q-1)-faces, q = 0..top.
    std::vector<SmithInvariants> boundary(uz(top + 1));
    for (int q = 0; q <= top; ++q) {
        const std::size_t count = k.face_count(q);
        std::vector<SparseColumn> columns(count);
        for (std::size_t i = 0; i < count; ++i) {
            if (q == 0) {
                columns[i] = {{0, 1}};
                continue;
            }
            const std::vector<int> f = k.face(q, i);
            SparseColumn col;
            std::vector<int> facet(f.size() - 1);
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                std::copy(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(drop), facet.begin());
                std::copy(f.begin() + static_cast<std::ptrdiff_t>(drop) + 1, f.end(),
                          facet.begin() + static_cast<std::ptrdiff_t>(drop));
                const auto row = k.find(facet);
                if (!row) throw std::logic_error("homology: order complex is not closed under faces");
                col.emplace_back(static_cast<int>(*row), drop % 2 == 0 ? 1 : -1);
            }
            std::sort(col.begin(), col.end());
            columns[i] = std::move(col);
        }
        boundary[uz(q)] = smith_invariants(std::move(columns), static_cast<int>(k.face_count(q - 1)));
    }

    HomologyResult h;
    h.euler = k.reduced_euler_characteristic();
    for (int q = -1; q <= top; ++q) {
        const auto f = static_cast<std::int64_t>(k.face_count(q));
        const auto rank_out = q >= 0 ? static_cast<std::int64_t>(boundary[uz(q)].rank) : 0;
        const auto rank_in = q + 1 <= top ? static_cast<std::int64_t>(boundary[uz(q + 1)].rank) : 0;
        HomologyGroup g;
        g.betti = f - rank_out - rank_in;
        if (q + 1 <= top) g.torsion = boundary[uz(q + 1)].torsion;
        h.groups.emplace(q, std::move(g));
    }
    return h;
}

// ---------------------------------------------------------------------------
// Certificates

SphereCertificate sphere_certificate(const FinitePoset& proper, int k, std::size_t face_budget)
{
    SphereCertificate cert;
    cert.homology = homology(OrderComplex::of(proper, face_budget));
    const FinitePoset bounded = proper.bounded_extension();
    cert.mobius = bounded.mobius(*bounded.bottom(), *bounded.top());
    const auto dim = cert.homology.sphere_dimension();
    const bool sphere = dim && *dim == k;
    const bool euler_ok = cert.homology.euler == cert.mobius;
    cert.passed = sphere && euler_ok;
    cert.message = "reduced homology " + cert.homology.describe() + ", expected S^" + std::to_string(k) +
                   "; reduced Euler characteristic " + std::to_string(cert.homology.euler) + ", mobius " +
                   std::to_string(cert.mobius);
    return cert;
}

TopologyCheck suspension_compare(const FinitePoset& lattice, std::size_t face_budget)
{
    if (!lattice.is_bounded()) return {false, "poset is not bounded"};
    const HomologyResult proper = homology(OrderComplex::of(lattice.proper_part(), face_budget));
    const IntervalPoset ints = interval_poset(lattice, IntervalVariant::Proper);
    const HomologyResult proper_int = homology(OrderComplex::of(ints.poset, face_budget));
    const HomologyResult whole = homology(OrderComplex::of(lattice, face_budget));
    const HomologyResult whole_int =
        homology(OrderComplex::of(interval_poset(lattice, IntervalVariant::All).poset, face_budget));

    TopologyCheck check;
    const bool shift_ok = proper.shifted_equals(proper_int, 1);
    const bool int_ok = whole.same_as(whole_int);
    check.passed = shift_ok && int_ok;
    check.message = "proper part " + proper.describe() + ", proper intervals " + proper_int.describe() +
                    (shift_ok ? " (suspension shift holds)" : " (suspension shift FAILS)") + "; L " + whole.describe() +
                    ", Int(L) " + whole_int.describe();
    return check;
}

WebbReport webb_reduction_check(const FinitePoset& lattice, std::size_t face_budget)
{
    WebbReport report;
    if (!is_lattice(lattice)) {
        report.message = "not a lattice";
        return report;
    }
    const IntervalPoset proper = interval_poset(lattice, IntervalVariant::Proper);
    const HomologyResult reference = homology(OrderComplex::of(proper.poset, face_budget));
    report.proper_intervals = proper.intervals.size();

    std::vector<int> survivors;
    std::vector<int> coatomic;
    std::string missing;
    for (std::size_t i = 0; i < proper.intervals.size(); ++i) {
        const Interval iv = proper.intervals[i];
        bool removable = false;
        if (iv.lower != iv.upper) {
            const HomologyResult open = homology(OrderComplex::of(lattice.open_interval(iv.lower, iv.upper), face_budget));
            removable = open.acyclic() && lattice.mobius(iv.lower, iv.upper) == 0;
        }
        const bool is_coat = is_coatomic(lattice, iv);
        if (is_coat) coatomic.push_back(static_cast<int>(i));
        if (!removable) survivors.push_back(static_cast<int>(i));
        if (!is_coat && !removable && missing.empty())
            missing = "non-coatomic interval [" + lattice.key(iv.lower) + ", " + lattice.key(iv.upper) +
                      "] has a non-acyclic open interval";
    }
    report.removed = proper.intervals.size() - survivors.size();
    report.survivors = survivors.size();
    report.coatomic = coatomic.size();
    report.survivors_are_coatomic = survivors == coatomic;

    const HomologyResult kept = homology(OrderComplex::of(proper.poset.subposet(survivors), face_budget));
    const HomologyResult coat = homology(OrderComplex::of(proper.poset.subposet(coatomic), face_budget));
    const bool kept_ok = kept.same_as(reference);
    const bool coat_ok = coat.same_as(reference);
    report.passed = missing.empty() && kept_ok && coat_ok;
    if (!missing.empty())
        report.message = missing;
    else
        report.message = "proper Int(L) " + reference.describe() + ", survivors " + kept.describe() +
                         ", proper coatomic " + coat.describe();
    return report;
}

} // namespace hstlab
