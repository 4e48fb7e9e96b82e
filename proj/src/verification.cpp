#include "hstlab/verification.hpp"

#include <algorithm>
#include <deque>

#include <nlohmann/json.hpp>

#include "hstlab/combinatorics.hpp"
#include "hstlab/geometry.hpp"

namespace hstlab {

namespace {

std::size_t uz(int x)
{
    return static_cast<std::size_t>(x);
}

int lookup(const Enumeration& e, const Triangulation& t, const char* what)
{
    const auto i = e.index_of(t);
    if (!i) throw std::logic_error(std::string(what) + " produced a triangulation outside the enumeration: " + t.to_json());
    return *i;
}

void fail(CheckResult& c, const std::string& witness)
{
    if (!c.passed) return;
    c.passed = false;
    c.witness = witness;
}

bool has_facet(const std::vector<Simplex>& facets, Simplex s)
{
    return std::find(facets.begin(), facets.end(), s) != facets.end();
}

} // namespace

bool SuspensionReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SuspensionReport::to_json() const
{
    nlohmann::ordered_json j;
    j["n"] = n;
    j["d"] = d;
    j["order"] = to_string(order);
    j["passed"] = ok();
    auto list = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        nlohmann::ordered_json entry;
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        if (!c.passed) entry["witness"] = c.witness;
        list.push_back(std::move(entry));
    }
    j["checks"] = std::move(list);
    return j.dump();
}

SuspensionReport verify_suspension(const Enumeration& p, const FinitePoset& p_order, const Enumeration& q,
                                   const FinitePoset& q_order, Order order)
{
    SuspensionReport report;
    report.n = p.n;
    report.d = p.d;
    report.order = order;
    CheckResult green_ideal{"green_ideal", true, {}};
    CheckResult f_i{"f_i_identity", true, {}};
    CheckResult f_j{"f_j_identity", true, {}};
    CheckResult colors{"image_colors", true, {}};
    CheckResult sandwich{"sandwich", true, {}};
    CheckResult fiber_bottom{"fiber_bottom", true, {}};
    CheckResult fiber_top{"fiber_top", true, {}};
    CheckResult monotone{"maps_monotone", true, {}};

    const auto key = [](const Enumeration& e, int x) { return e.triangulations[uz(x)].to_json(); };

    std::vector<Color> col(p.size());
    std::vector<int> f(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
        col[x] = color(p.triangulations[x]);
        f[x] = lookup(q, contract_last(p.triangulations[x]), "f");
    }
    std::vector<int> i_map(q.size());
    std::vector<int> j_map(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) {
        i_map[x] = lookup(p, insert_i(q.triangulations[x]), "i");
        j_map[x] = lookup(p, insert_j(q.triangulations[x]), "j");
    }

    for (int x = 0; x < static_cast<int>(p.size()); ++x) {
        if (col[uz(x)] != Color::Green) continue;
        const Bitset& below = p_order.down_set(x);
        for (auto y = below.find_first(); y != Bitset::npos; y = below.find_next(y))
            if (col[y] == Color::Red) fail(green_ideal, key(p, static_cast<int>(y)) + " is red but below green " + key(p, x));
    }

    for (int x = 0; x < static_cast<int>(q.size()); ++x) {
        if (f[uz(i_map[uz(x)])] != x) fail(f_i, "f(i(T)) != T for T = " + key(q, x));
        if (f[uz(j_map[uz(x)])] != x) fail(f_j, "f(j(T)) != T for T = " + key(q, x));
        if (col[uz(i_map[uz(x)])] != Color::Green) fail(colors, "i(T) is red for T = " + key(q, x));
        if (col[uz(j_map[uz(x)])] != Color::Red) fail(colors, "j(T) is green for T = " + key(q, x));
    }

    const int p_bottom = *p_order.bottom();
    const int p_top = *p_order.top();
    const int q_bottom = *q_order.bottom();
    const int q_top = *q_order.top();
    for (int x = 0; x < static_cast<int>(p.size()); ++x) {
        const int fx = f[uz(x)];
        if (!p_order.leq(i_map[uz(fx)], x)) fail(sandwich, "i(f(T)) is not below T = " + key(p, x));
        if (!p_order.leq(x, j_map[uz(fx)])) fail(sandwich, "j(f(T)) is not above T = " + key(p, x));
        if (fx == q_bottom && x != p_bottom && col[uz(x)] != Color::Red)
            fail(fiber_bottom, key(p, x) + " maps to the bottom but is green");
        if (fx == q_top && x != p_top && col[uz(x)] != Color::Green)
            fail(fiber_top, key(p, x) + " maps to the top but is red");
    }

    for (auto [x, y] : p_order.cover_pairs())
        if (!q_order.leq(f[uz(x)], f[uz(y)])) fail(monotone, "f reverses " + key(p, x) + " < " + key(p, y));
    for (auto [x, y] : q_order.cover_pairs()) {
        if (!p_order.leq(i_map[uz(x)], i_map[uz(y)])) fail(monotone, "i reverses " + key(q, x) + " < " + key(q, y));
        if (!p_order.leq(j_map[uz(x)], j_map[uz(y)])) fail(monotone, "j reverses " + key(q, x) + " < " + key(q, y));
    }

    report.checks = {green_ideal, f_i, f_j, colors, sandwich, fiber_bottom, fiber_top, monotone};
    return report;
}

SuspensionReport verify_suspension(int n, int d, Order order)
{
    if (n <= d + 2) throw std::invalid_argument("verify_suspension: need n > d + 2");
    const Enumeration p = enumerate_triangulations(n, d);
    const Enumeration q = enumerate_triangulations(n - 1, d);
    return verify_suspension(p, build_order(p, order), q, build_order(q, order), order);
}

std::optional<std::vector<Simplex>> find_connecting_set(const Enumeration& e, int from, int to)
{
    std::vector<std::vector<const FlipStep*>> out(e.size());
    for (const FlipStep& s : e.flips) out[uz(s.from)].push_back(&s);
    std::vector<const FlipStep*> via(e.size(), nullptr);
    std::vector<char> seen(e.size(), 0);
    std::deque<int> queue{from};
    seen[uz(from)] = 1;
    while (!queue.empty() && !seen[uz(to)]) {
        const int x = queue.front();
        queue.pop_front();
        for (const FlipStep* s : out[uz(x)]) {
            if (seen[uz(s->to)]) continue;
            seen[uz(s->to)] = 1;
            via[uz(s->to)] = s;
            queue.push_back(s->to);
        }
    }
    if (!seen[uz(to)]) return std::nullopt;
    std::vector<Simplex> flips;
    for (int x = to; x != from; x = via[uz(x)]->from) flips.push_back(via[uz(x)]->flip);
    std::sort(flips.begin(), flips.end());
    flips.erase(std::unique(flips.begin(), flips.end()), flips.end());
    return flips;
}

ConnectingResult verify_connecting_set(const Triangulation& t, const Triangulation& t_prime,
                                       const std::vector<Simplex>& connecting)
{
    const int d = t.d();
    auto failure = [](int condition, std::string detail) { return ConnectingResult{false, condition, std::move(detail)}; };
    for (Simplex x : connecting)
        if (x.size() != d + 2) return failure(1, x.to_string() + " is not a (d+1)-simplex");

    for (std::size_t a = 0; a < connecting.size(); ++a)
        for (std::size_t b = a + 1; b < connecting.size(); ++b)
            if (!zig_zag_admissible(connecting[a], connecting[b], d + 1))
                return failure(1, connecting[a].to_string() + " and " + connecting[b].to_string() + " are not admissible");

    std::vector<FacetSplit> splits;
    for (Simplex x : connecting) splits.push_back(simplex_facet_split(x));
    auto contained_elsewhere = [&](Simplex s, std::size_t self) {
        for (std::size_t k = 0; k < connecting.size(); ++k)
            if (k != self && s.is_subset_of(connecting[k])) return true;
        return false;
    };
    for (std::size_t k = 0; k < connecting.size(); ++k)
        for (Simplex s : splits[k].lower)
            if (!contained_elsewhere(s, k) && !t.contains(s))
                return failure(2, "lower facet " + s.to_string() + " of " + connecting[k].to_string() + " is unmatched");
    for (std::size_t k = 0; k < connecting.size(); ++k)
        for (Simplex s : splits[k].upper)
            if (!contained_elsewhere(s, k) && !t_prime.contains(s))
                return failure(3, "upper facet " + s.to_string() + " of " + connecting[k].to_string() + " is unmatched");

    for (Simplex s : t.simplices()) {
        if (t_prime.contains(s)) continue;
        bool found = false;
        for (const FacetSplit& sp : splits) found = found || has_facet(sp.lower, s);
        if (!found) return failure(4, s.to_string() + " is not a lower facet of the connecting set");
    }
    for (Simplex s : t_prime.simplices()) {
        if (t.contains(s)) continue;
        bool found = false;
        for (const FacetSplit& sp : splits) found = found || has_facet(sp.upper, s);
        if (!found) return failure(5, s.to_string() + " is not an upper facet of the connecting set");
    }

    auto at_most_once = [&](Simplex s) {
        return std::count_if(connecting.begin(), connecting.end(), [&](Simplex x) { return s.is_subset_of(x); }) <= 1;
    };
    for (Simplex s : t.simplices())
        if (!t_prime.contains(s) && !at_most_once(s)) return failure(6, s.to_string() + " lies in two connecting simplices");
    for (Simplex s : t_prime.simplices())
        if (!t.contains(s) && !at_most_once(s)) return failure(6, s.to_string() + " lies in two connecting simplices");
    return {};
}

std::vector<Simplex> sweep_set_a(const Triangulation& t)
{
    const int n = t.n();
    std::vector<Simplex> out;
    for (Simplex s : t.simplices())
        if (s.contains(n) && !s.contains(n - 1)) out.push_back(s.with(n - 1));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> sweep_set_b(const Triangulation& t)
{
    const int n = t.n();
    std::vector<Simplex> out;
    for (Simplex s : t.simplices())
        if (s.contains(n - 1) && !s.contains(n)) out.push_back(s.with(n));
    std::sort(out.begin(), out.end());
    return out;
}

CheckResult verify_s0_monotone(const Enumeration& e, const FinitePoset& order)
{
    CheckResult result{"s0_monotone", true, {}};
    const Simplex s0 = special_simplex(e.n, e.d);
    std::vector<char> has(e.size());
    for (std::size_t x = 0; x < e.size(); ++x) has[x] = e.triangulations[x].contains(s0);
    for (int x = 0; x < order.size(); ++x) {
        const Bitset& above = order.up_set(x);
        for (auto y = above.find_first(); y != Bitset::npos; y = above.find_next(y)) {
            const bool broken = e.d % 2 == 0 ? (has[uz(x)] && !has[y]) : (has[y] && !has[uz(x)]);
            if (broken) {
                fail(result, e.triangulations[uz(x)].to_json() + " < " + e.triangulations[y].to_json());
                return result;
            }
        }
    }
    return result;
}

std::vector<Triangulation> brute_force_triangulations(int n, int d, std::size_t max_candidates)
{
    const std::vector<Simplex> candidates = subsets_of_size(n, d + 1);
    if (candidates.size() > max_candidates)
        throw ResourceLimitExceeded("brute force: " + std::to_string(candidates.size()) + " candidate simplices exceed the guard of " +
                                    std::to_string(max_candidates));
    const mpz_class target = hull_volume(LabelSet::range(1, n), d);
    std::vector<mpz_class> volume;
    for (Simplex s : candidates) volume.push_back(normalized_volume(s, d));
    std::vector<mpz_class> remaining(candidates.size() + 1, 0);
    for (std::size_t k = candidates.size(); k-- > 0;) remaining[k] = remaining[k + 1] + volume[k];

    std::vector<Triangulation> out;
    std::vector<Simplex> chosen;
    auto search = [&](auto&& self, std::size_t k, const mpz_class& covered) -> void {
        if (covered == target) {
            if (validate(chosen, n, d).ok()) out.emplace_back(n, d, chosen);
            return;
        }
        if (k == candidates.size() || covered + remaining[k] < target) return;
        const Simplex s = candidates[k];
        if (std::all_of(chosen.begin(), chosen.end(), [&](Simplex c) { return zig_zag_admissible(c, s, d); })) {
            chosen.push_back(s);
            self(self, k + 1, covered + volume[k]);
            chosen.pop_back();
        }
        self(self, k + 1, covered);
    };
    search(search, 0, mpz_class(0));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hstlab
