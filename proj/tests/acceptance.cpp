// Acceptance checks. One line per criterion:
//   criterion N: PASS|FAIL  name  (details)
// Usage: acceptance [--criterion N] [--verbose]

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iwahori.hpp"

using namespace iwahori;

namespace {

// pinned limits
constexpr double kOracleSweepSeconds = 300.0;
constexpr std::size_t kMinTwoPathCases = 500;
constexpr std::size_t kMinAssocTriples = 200;
constexpr std::size_t kSandwiches = 100;

struct Outcome {
    bool pass;
    std::string detail;
    Report report;
};

std::string summary(const Report& r) {
    return std::to_string(r.cases) + " cases, " + std::to_string(r.failures.size()) + " failed";
}

Outcome from_report(Report r) {
    const bool ok = r.passed();
    return {ok, summary(r), std::move(r)};
}

Outcome oracle_sweep() {
    SuiteParams p;
    p.range = 2;
    p.qs = {2, 3};
    const auto t0 = std::chrono::steady_clock::now();
    Report r = suite_level0_counts(p, default_engine());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.passed() && secs < kOracleSweepSeconds && r.cases == 2 * 4 * 25;
    for (const char* f : {"1a", "1e", "1f", "2c", "2i", "2j"}) ok = ok && r.coverage.count(f);
    return {ok, summary(r) + ", " + std::to_string(secs) + " s (limit " + std::to_string(kOracleSweepSeconds) + " s)",
            std::move(r)};
}

Outcome two_path() {
    SuiteParams p;
    p.cases = 512;
    Report r = run_suite("two_path", p);
    bool ok = r.passed() && r.cases >= 2 * kMinTwoPathCases;
    std::size_t pairs = 0;
    for (const auto& f : table_families()) {
        ok = ok && r.coverage.count(f);
        if (r.coverage.count(f)) pairs += r.coverage.at(f);
    }
    for (const char* k : {"rays(1,1)", "rays(-1,-1)", "rays(1,0)", "rays(0,-1)"}) {
        ok = ok && r.coverage.count(k);
        if (r.coverage.count(k)) pairs += r.coverage.at(k);
    }
    ok = ok && pairs >= kMinTwoPathCases;
    return {ok, std::to_string(pairs) + " pairs, " + summary(r), std::move(r)};
}

Outcome identity_assoc() {
    SuiteParams p;
    p.cases = kMinAssocTriples;
    return from_report(run_suite("identity_assoc", p));
}

Outcome shape() {
    SuiteParams p;
    p.range = 4;
    p.level_range = 3;
    p.exhaustive = true;
    Report r = run_suite("shape_fuzz", p);
    const bool ok = r.passed() && r.cases == 4 * 9 * 9 * 7 * 7;
    return {ok, summary(r), std::move(r)};
}

Outcome center() {
    SuiteParams p;
    p.range = 2;
    p.level_range = 2;
    return from_report(run_suite("center", p));
}

Outcome weyl() {
    SuiteParams p;
    p.qs = {2, 3};
    p.cases = kSandwiches;
    return from_report(run_suite("weyl", p));
}

struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "level-0 oracle equivalence", oracle_sweep},
        {2, "two-path product agreement", two_path},
        {3, "identity and associativity", identity_assoc},
        {4, "support shape of basis products", shape},
        {5, "theta monomials", [] { return from_report(run_suite("bernstein")); }},
        {6, "theta subalgebra", [] { return from_report(run_suite("subalgebra")); }},
        {7, "center", center},
        {8, "Iwahori-Matsumoto relations", [] { return from_report(run_suite("im_relations")); }},
        {9, "Weyl group and classifier", weyl},
        {10, "negative control", [] { return from_report(negative_control()); }},
    };
    return all;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    int only = 0;
    bool verbose = false;
    app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
    app.add_flag("--verbose", verbose, "print the full suite report");
    CLI11_PARSE(app, argc, argv);

    bool all_ok = true;
    for (const auto& c : criteria()) {
        if (only && c.id != only) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what(), {}};
        }
        all_ok = all_ok && o.pass;
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << o.detail
                  << ")\n";
        if (verbose || !o.pass) std::cout << o.report.text(5);
        else
            for (const auto& n : o.report.notes) std::cout << "  note: " << n << "\n";
    }
    return all_ok ? 0 : 1;
}
