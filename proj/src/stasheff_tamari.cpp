#include "hstlab/stasheff_tamari.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "hstlab/geometry.hpp"

namespace hstlab {

std::size_t default_enumeration_cap()
{
    if (const char* env = std::getenv("HSTLAB_MAX_TRIANGULATIONS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

std::optional<int> Enumeration::index_of(const Triangulation& t) const
{
    auto it = std::lower_bound(triangulations.begin(), triangulations.end(), t);
    if (it == triangulations.end() || *it != t) return std::nullopt;
    return static_cast<int>(it - triangulations.begin());
}

std::vector<std::string> Enumeration::keys() const
{
    std::vector<std::string> out;
    out.reserve(triangulations.size());
    for (const auto& t : triangulations) out.push_back(t.to_json());
    return out;
}

Enumeration enumerate_triangulations(int n, int d, std::size_t cap)
{
    if (d < 1 || n < d + 2) throw std::invalid_argument("enumerate_triangulations: need d >= 1 and n >= d + 2");
    std::unordered_map<Triangulation, int, TriangulationHash> seen;
    std::vector<Triangulation> found;
    std::vector<FlipStep> steps;
    std::deque<int> queue;

    auto visit = [&](Triangulation t) {
        auto [it, inserted] = seen.emplace(t, static_cast<int>(found.size()));
        if (inserted) {
            if (found.size() >= cap)
                throw ResourceLimitExceeded("enumeration of C(" + std::to_string(n) + "," + std::to_string(d) +
                                            ") exceeded the cap of " + std::to_string(cap) + " triangulations");
            found.push_back(std::move(t));
            queue.push_back(it->second);
        }
        return it->second;
    };

    visit(bottom(n, d));
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (Simplex flip : increasing_flips(found[static_cast<std::size_t>(x)])) {
            const int y = visit(apply_flip(found[static_cast<std::size_t>(x)], flip));
            steps.push_back({x, y, flip});
        }
    }

    std::vector<int> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return found[static_cast<std::size_t>(a)] < found[static_cast<std::size_t>(b)]; });
    std::vector<int> rank(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    Enumeration e;
    e.n = n;
    e.d = d;
    e.triangulations.reserve(found.size());
    for (int i : order) e.triangulations.push_back(std::move(found[static_cast<std::size_t>(i)]));
    for (FlipStep& s : steps) {
        s.from = rank[static_cast<std::size_t>(s.from)];
        s.to = rank[static_cast<std::size_t>(s.to)];
    }
    std::sort(steps.begin(), steps.end(), [](const FlipStep& a, const FlipStep& b) {
        return std::tie(a.from, a.to, a.flip) < std::tie(b.from, b.to, b.flip);
    });
    e.flips = std::move(steps);
    return e;
}

const char* to_string(Order o) noexcept
{
    return o == Order::S1 ? "s1" : "s2";
}

Order parse_order(const std::string& text)
{
    if (text == "s1") return Order::S1;
    if (text == "s2") return Order::S2;
    throw std::invalid_argument("unknown order '" + text + "' (expected s1 or s2)");
}

FinitePoset build_s1(const Enumeration& e)
{
    std::vector<std::pair<int, int>> steps;
    steps.reserve(e.flips.size());
    for (const FlipStep& s : e.flips) steps.emplace_back(s.from, s.to);
    return FinitePoset::from_steps(e.keys(), steps);
}

SubmersionTable submersion_table(const Enumeration& e)
{
    const int i = (e.d + 1) / 2;
    SubmersionTable table;
    table.simplices = subsets_of_size(e.n, i + 1);
    const std::size_t m = table.simplices.size();
    std::unordered_map<Simplex, std::size_t> sigma_index;
    for (std::size_t k = 0; k < m; ++k) sigma_index.emplace(table.simplices[k], k);

    table.sets.reserve(e.size());
    if (has_combinatorial_submersion(e.d, i)) {
        for (const Triangulation& t : e.triangulations) {
            Bitset b(m);
            for (Simplex sigma : submersion_set_combinatorial(t, i)) b.set(sigma_index.at(sigma));
            table.sets.push_back(std::move(b));
        }
        return table;
    }

    // violators[s] = sigmas rising strictly above the lift of the d-simplex s somewhere.
    std::unordered_map<Simplex, Bitset> violators;
    for (Simplex s : subsets_of_size(e.n, e.d + 1)) {
        Bitset b(m);
        for (std::size_t k = 0; k < m; ++k) {
            const LpResult r = max_lift_excess(table.simplices[k], s, e.d);
            if (r.status == LpStatus::Optimal && r.value > 0) b.set(k);
        }
        violators.emplace(s, std::move(b));
    }
    for (const Triangulation& t : e.triangulations) {
        Bitset bad(m);
        for (Simplex s : t.simplices()) bad |= violators.at(s);
        table.sets.push_back(~bad);
    }
    return table;
}

FinitePoset build_s2(const Enumeration& e)
{
    const SubmersionTable table = submersion_table(e);
    const std::size_t n = e.size();
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (table.sets[x].is_subset_of(table.sets[y])) up[x].set(y);
    return FinitePoset::from_up_sets(e.keys(), std::move(up));
}

FinitePoset build_order(const Enumeration& e, Order order)
{
    return order == Order::S1 ? build_s1(e) : build_s2(e);
}

std::vector<std::pair<int, int>> covers_not_flips(const Enumeration& e, const FinitePoset& s1)
{
    std::vector<std::pair<int, int>> flips;
    for (const FlipStep& s : e.flips) flips.emplace_back(s.from, s.to);
    std::vector<std::pair<int, int>> out;
    for (auto c : s1.cover_pairs())
        if (!std::binary_search(flips.begin(), flips.end(), c)) out.push_back(c);
    return out;
}

} // namespace hstlab
