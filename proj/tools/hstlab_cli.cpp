#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hstlab/baues.hpp"
#include "hstlab/poset.hpp"
#include "hstlab/stasheff_tamari.hpp"
#include "hstlab/topology.hpp"
#include "hstlab/triangulation.hpp"
#include "hstlab/verification.hpp"

using namespace hstlab;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

struct RunConfig {
    std::string command;
    int n = 0;
    int d = 0;
    std::string order = "s2";
    std::string output;
    std::string format = "json";
    std::size_t cap = default_enumeration_cap();
    std::size_t face_budget = kDefaultFaceBudget;
};

void validate_config(const RunConfig& c)
{
    if (c.d < 1 || c.n <= c.d) throw std::invalid_argument("need n > d >= 1");
    if (c.n > kMaxLabel) throw std::invalid_argument("n must be at most " + std::to_string(kMaxLabel));
    if (c.cap == 0 || c.face_budget == 0) throw std::invalid_argument("budgets must be positive");
    if (c.format != "json" && c.format != "dot") throw std::invalid_argument("format must be json or dot");
    parse_order(c.order);
}

void emit(const RunConfig& c, const std::string& text)
{
    if (c.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + c.output);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string name_of(const RunConfig& c, const char* prefix = "S")
{
    return std::string(prefix) + "(" + std::to_string(c.n) + "," + std::to_string(c.d) + ")";
}

std::string order_name(const RunConfig& c)
{
    return (c.order == "s1" ? "S1(" : "S2(") + std::to_string(c.n) + "," + std::to_string(c.d) + ")";
}

Enumeration enumerate(const RunConfig& c)
{
    return enumerate_triangulations(c.n, c.d, c.cap);
}

std::string poset_export(const FinitePoset& p, const RunConfig& c, const std::string& graph_name)
{
    return c.format == "dot" ? p.to_dot(graph_name) : p.to_json();
}

int run_enumerate(const RunConfig& c)
{
    const Enumeration e = enumerate(c);
    std::cout << "C(" << c.n << "," << c.d << "): " << e.size() << " triangulations\n";
    if (!c.output.empty()) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& t : e.triangulations) list.push_back(nlohmann::ordered_json::parse(t.to_json()));
        emit(c, list.dump());
    }
    return 0;
}

int run_poset(const RunConfig& c)
{
    const Enumeration e = enumerate(c);
    emit(c, poset_export(build_order(e, parse_order(c.order)), c, order_name(c)));
    return 0;
}

int run_compare_orders(const RunConfig& c)
{
    const Enumeration e = enumerate(c);
    const FinitePoset s1 = build_s1(e);
    const FinitePoset s2 = build_s2(e);
    const bool contained = relation_contained(s1, s2);
    const auto diff = compare_relations(s1, s2);
    std::cout << "S1" << name_of(c, "") << " <= S2" << name_of(c, "") << ": " << (contained ? "yes" : "NO") << '\n';
    if (!diff) {
        std::cout << "S1" << name_of(c, "") << " = S2" << name_of(c, "") << '\n';
    } else {
        std::cout << "orders differ: " << s1.key(diff->x) << " <= " << s1.key(diff->y) << " holds only in "
                  << (diff->in_first ? "S1" : "S2") << '\n';
    }
    const auto extra = covers_not_flips(e, s1);
    std::cout << "S1 covers that are not single flips: " << extra.size() << '\n';
    if (!contained || (c.d <= 3 && diff)) return kExitFailure;
    return 0;
}

int run_check_lattice(const RunConfig& c)
{
    const Enumeration e = enumerate(c);
    const FinitePoset p = build_order(e, parse_order(c.order));
    const auto witness = lattice_witness(p);
    if (!witness) {
        std::cout << order_name(c) << " is a lattice\n";
        return 0;
    }
    std::cout << order_name(c) << " is not a lattice\n"
              << "witness (" << to_string(witness->reason) << "):\n  " << p.key(witness->x) << "\n  " << p.key(witness->y)
              << '\n';
    return (c.order == "s2" && c.d <= 3) ? kExitFailure : 0;
}

int run_mobius(const RunConfig& c)
{
    const Enumeration e = enumerate(c);
    const FinitePoset p = build_order(e, parse_order(c.order));
    const std::int64_t mu = p.mobius(*p.bottom(), *p.top());
    const std::int64_t expected = (c.n - c.d - 3) % 2 == 0 ? 1 : -1;
    std::cout << "mu(0,1) of " << order_name(c) << " = " << mu << " (expected " << expected << ")\n";
    return mu == expected ? 0 : kExitFailure;
}

int run_sphere(const RunConfig& c)
{
    const Enumeration e = enumerate(c);
    const FinitePoset p = build_order(e, parse_order(c.order));
    const int k = c.n - c.d - 3;
    const SphereCertificate cert = sphere_certificate(p.proper_part(), k, c.face_budget);
    std::cout << "proper part of " << order_name(c) << ": " << cert.message << '\n';
    std::cout << "homology certificate " << (cert.passed ? "PASS" : "FAIL") << ": S^" << k << '\n';
    if (!c.output.empty()) emit(c, cert.homology.to_json(cert.mobius));
    return cert.passed ? 0 : kExitFailure;
}

int run_baues(const RunConfig& c)
{
    if (c.d > 3) throw std::invalid_argument("the Baues construction needs d <= 3");
    const Enumeration e = enumerate(c);
    const BauesPoset b = baues_poset(e, build_s2(e));
    const int k = c.n - c.d - 2;
    std::cout << "proper subdivisions of C(" << c.n << "," << c.d << "): " << b.poset.size() << '\n';
    std::cout << "refinement agrees with interval inclusion: " << (b.order_matches_intervals ? "yes" : "NO") << '\n';
    const SphereCertificate cert = sphere_certificate(b.poset, k, c.face_budget);
    std::cout << cert.message << '\n';
    std::cout << "homology certificate " << (cert.passed ? "PASS" : "FAIL") << ": S^" << k << '\n';
    if (!c.output.empty()) emit(c, poset_export(b.poset, c, "Baues" + name_of(c, "")));
    return cert.passed && b.order_matches_intervals ? 0 : kExitFailure;
}

int run_verify_suspension(const RunConfig& c)
{
    if (c.n <= c.d + 2) throw std::invalid_argument("verify-suspension needs n > d + 2");
    const SuspensionReport r = verify_suspension(c.n, c.d, parse_order(c.order));
    for (const CheckResult& check : r.checks)
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << (check.passed ? "" : ": " + check.witness) << '\n';
    if (!c.output.empty()) emit(c, r.to_json());
    return r.ok() ? 0 : kExitFailure;
}

int run_verify_connecting(const RunConfig& c)
{
    if (c.n <= c.d + 2) throw std::invalid_argument("verify-connecting needs n > d + 2");
    const Enumeration e = enumerate(c);
    const int bottom_index = *e.index_of(bottom(c.n, c.d));
    std::size_t failures = 0;
    std::size_t path_sets = 0;
    for (std::size_t x = 0; x < e.size(); ++x) {
        const Triangulation& t = e.triangulations[x];
        const Triangulation f = contract_last(t);
        const ConnectingResult a = verify_connecting_set(insert_i(f), t, sweep_set_a(t));
        const ConnectingResult b = verify_connecting_set(t, insert_j(f), sweep_set_b(t));
        for (const auto* r : {&a, &b})
            if (!r->passed) {
                ++failures;
                std::cout << "FAIL (" << (r == &a ? "A" : "B") << ") condition " << r->failed_condition << " for "
                          << t.to_json() << ": " << r->detail << '\n';
            }
        if (const auto path = find_connecting_set(e, bottom_index, static_cast<int>(x))) {
            const ConnectingResult r = verify_connecting_set(e.triangulations[static_cast<std::size_t>(bottom_index)], t, *path);
            if (r.passed) ++path_sets;
        }
    }
    std::cout << "sweep sets checked for " << e.size() << " triangulations, failures: " << failures << '\n';
    std::cout << "flip-path sets from the bottom satisfying (i)-(vi): " << path_sets << " of " << e.size() << '\n';
    return failures == 0 ? 0 : kExitFailure;
}

int run_oracle_crosscheck(const RunConfig& c)
{
    const Enumeration e = enumerate(c);
    const std::vector<Triangulation> brute = brute_force_triangulations(c.n, c.d);
    const bool same = brute == e.triangulations;
    std::cout << "flip enumeration: " << e.size() << ", brute force: " << brute.size() << " -> "
              << (same ? "identical" : "DIFFERENT") << '\n';
    return same ? 0 : kExitFailure;
}

int run_flip_graph(const RunConfig& c)
{
    const Enumeration e = enumerate(c);
    std::ostringstream out;
    if (c.format == "dot") {
        out << "digraph \"flips" << name_of(c, "") << "\" {\n";
        for (std::size_t x = 0; x < e.size(); ++x) out << "  n" << x << ";\n";
        for (const FlipStep& s : e.flips)
            out << "  n" << s.from << " -> n" << s.to << " [label=\"" << s.flip.to_string() << "\"];\n";
        out << "}\n";
    } else {
        nlohmann::ordered_json j;
        j["n"] = c.n;
        j["d"] = c.d;
        auto nodes = nlohmann::ordered_json::array();
        for (const auto& t : e.triangulations) nodes.push_back(nlohmann::ordered_json::parse(t.to_json())["simplices"]);
        j["triangulations"] = std::move(nodes);
        auto edges = nlohmann::ordered_json::array();
        for (const FlipStep& s : e.flips) edges.push_back({s.from, s.to, s.flip.labels()});
        j["flips"] = std::move(edges);
        out << j.dump();
    }
    emit(c, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Triangulations of cyclic polytopes, higher Stasheff-Tamari orders and Baues posets"};
    app.require_subcommand(1);
    RunConfig config;

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const RunConfig&);
        bool uses_order;
        bool uses_format;
    };
    const Command commands[] = {
        {"enumerate", "Count triangulations of C(n,d); -o writes them as JSON", run_enumerate, false, false},
        {"poset", "Export S1(n,d) or S2(n,d) as JSON or DOT", run_poset, true, true},
        {"compare-orders", "Compare the relations S1(n,d) and S2(n,d)", run_compare_orders, false, false},
        {"check-lattice", "Test whether the order is a lattice", run_check_lattice, true, false},
        {"mobius", "Mobius function from bottom to top", run_mobius, true, false},
        {"sphere", "Homology certificate that the proper part is an (n-d-3)-sphere", run_sphere, true, false},
        {"baues", "Baues poset of proper subdivisions (d <= 3)", run_baues, false, true},
        {"verify-suspension", "Check the suspension hypotheses relating C(n,d) and C(n-1,d)", run_verify_suspension, true, false},
        {"verify-connecting", "Check the sweep connecting sets for every triangulation", run_verify_connecting, false,
         false},
        {"oracle-crosscheck", "Compare flip enumeration with brute force", run_oracle_crosscheck, false, false},
        {"flip-graph", "Export the increasing flip graph", run_flip_graph, false, true},
    };

    for (const Command& cmd : commands) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        sub->add_option("--n", config.n, "number of vertices")->required();
        sub->add_option("--d", config.d, "dimension")->required();
        if (cmd.uses_order) sub->add_option("--order", config.order, "s1 or s2")->capture_default_str();
        if (cmd.uses_format) sub->add_option("--format", config.format, "json or dot")->capture_default_str();
        sub->add_option("-o,--output", config.output, "output file");
        sub->add_option("--cap", config.cap, "maximum number of triangulations")->capture_default_str();
        sub->add_option("--face-budget", config.face_budget, "maximum number of order-complex faces")
            ->capture_default_str();
        const std::string name = cmd.name;
        sub->callback([&config, name]() { config.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        validate_config(config);
        for (const Command& cmd : commands)
            if (config.command == cmd.name) return cmd.run(config);
    } catch (const ResourceLimitExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
