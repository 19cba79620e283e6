#ifndef IWAHORI_TOOLS_CLI_HPP
#define IWAHORI_TOOLS_CLI_HPP

// Command-line front end. Exit status: 0 success, 1 verification failure,
// 2 usage or parse error.

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iwahori.hpp"

namespace iwahori::cli {

enum Exit : int { ok = 0, verification_failed = 1, usage = 2 };

namespace detail {

inline std::vector<long long> int_list(const std::string& text, std::size_t count, const std::string& what) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + part + "' in " + what, 0);
        }
        if (used != part.size()) throw ParseError("bad integer '" + part + "' in " + what, 0);
        out.push_back(v);
    }
    if (out.size() != count)
        throw ParseError(what + " needs " + std::to_string(count) + " comma-separated integers", 0);
    return out;
}

inline BasisIndex label_arg(const std::string& text, const std::string& what) {
    const auto v = int_list(text, 3, what);
    if (v[0] != 1 && v[0] != 2) throw ParseError("sheet must be 1 or 2 in " + what, 0);
    return {static_cast<int>(v[0]), v[1], v[2]};
}

inline void print_element(std::ostream& out, const HeckeElement& x, bool json, bool latex) {
    if (json) out << to_json(x).dump() << "\n";
    else if (latex) out << format_latex(x) << "\n";
    else out << format_text(x) << "\n";
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic in the Iwahori-Hecke algebra of SL2 over a two-dimensional local field"};
    app.require_subcommand(1);

    bool json = false, latex = false, count_only = false;
    std::string x_text, y_text, at_text, matrix_text, pair_x, pair_y, suite, qs_text = "2,3";
    long q = 2;
    int sheet = 1;
    long long index = 0, seed = 1, range = -1, cases = 0;

    auto* mul = app.add_subcommand("mul", "print the product of two element expressions");
    mul->add_option("x", x_text, "left factor")->required();
    mul->add_option("y", y_text, "right factor")->required();
    mul->add_flag("--json", json, "print the element schema");
    mul->add_flag("--latex", latex, "print LaTeX");

    auto* coeff = app.add_subcommand("coeff", "print one coefficient of an expression, or of x*y by direct summation");
    coeff->add_option("x", x_text, "element expression")->required();
    coeff->add_option("y", y_text, "optional right factor");
    coeff->add_option("--at", at_text, "target a,i,j")->required();

    auto* show = app.add_subcommand("show", "print an element expression in canonical form");
    show->add_option("x", x_text, "element expression")->required();
    show->add_flag("--json", json, "print the element schema");
    show->add_flag("--latex", latex, "print LaTeX");

    auto* classify_cmd = app.add_subcommand("classify", "print the double-coset label of a matrix");
    classify_cmd->add_option("matrix", matrix_text, "e.g. [[1,1],[t1,1+t1]]")->required();
    classify_cmd->add_option("--q", q, "residue field size (prime)")->required();

    auto* reps = app.add_subcommand("reps", "list right-coset representatives of a level-0 double coset");
    reps->add_option("a", sheet, "sheet")->required();
    reps->add_option("i", index, "index")->required()->allow_extra_args(false);
    reps->add_option("--q", q, "residue field size (prime)")->required();
    reps->add_flag("--count-only", count_only, "print only the number of representatives");

    auto* oracle = app.add_subcommand("oracle", "compare coset counting with the table at level 0");
    oracle->add_option("x", pair_x, "a,i")->required();
    oracle->add_option("y", pair_y, "b,k")->required();
    oracle->add_option("--q", q, "residue field size (prime)")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all', 'negative_control')");
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--range", range, "index range |i|");
    verify->add_option("--q", qs_text, "comma-separated primes");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--cases", cases, "fuzz cases");
    verify->add_flag("--json", json, "print the report as JSON");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    try {
        if (*mul) {
            detail::print_element(out, parse_element(x_text) * parse_element(y_text), json, latex);
        } else if (*show) {
            detail::print_element(out, parse_element(x_text), json, latex);
        } else if (*coeff) {
            const BasisIndex t = detail::label_arg(at_text, "--at");
            const HeckeElement x = parse_element(x_text);
            const Coeff c = y_text.empty() ? x.coefficient_at(t.sheet, t.i, t.j)
                                           : coeff_of_product(x, parse_element(y_text), t);
            out << c.str() << "\n";
        } else if (*classify_cmd) {
            out << classify(parse_matrix(matrix_text, q)).str() << "\n";
        } else if (*reps) {
            const auto list = enumerate_reps(sheet, index, q);
            if (count_only) out << list.size() << "\n";
            else
                for (const auto& z : list) out << z.str() << "\n";
        } else if (*oracle) {
            const auto xa = detail::int_list(pair_x, 2, "x"), ya = detail::int_list(pair_y, 2, "y");
            const BasisIndex x{static_cast<int>(xa[0]), xa[1], 0}, y{static_cast<int>(ya[0]), ya[1], 0};
            const HeckeElement sym = mul_basis(x, y);
            const auto counts = product_counts(x, y, q);
            const auto table = evaluate_at(sym, q);
            std::set<BasisIndex> keys;
            for (const auto& [k, v] : counts) keys.insert(k);
            for (const auto& [k, v] : table) keys.insert(k);
            out << "chi" << x.str() << " * chi" << y.str() << " at q=" << q << "  [" << table_family(x, y) << "]\n";
            out << "symbolic: " << format_text(sym) << "\n";
            out << "target      count    table\n";
            for (const auto& k : keys) {
                const auto c = counts.count(k) ? counts.at(k).get_str() : "0";
                const auto s = table.count(k) ? table.at(k).get_str() : "0";
                out << k.str() << std::string(k.str().size() < 12 ? 12 - k.str().size() : 1, ' ') << c
                    << std::string(c.size() < 9 ? 9 - c.size() : 1, ' ') << s << (c == s ? "" : "   MISMATCH") << "\n";
            }
            const bool agree = counts == table;
            out << (agree ? "agree" : "disagree") << "\n";
            return agree ? ok : verification_failed;
        } else if (*verify) {
            SuiteParams p;
            p.qs.clear();
            for (long long v : detail::int_list(qs_text, static_cast<std::size_t>(std::count(qs_text.begin(), qs_text.end(), ',') + 1), "--q"))
                p.qs.push_back(static_cast<long>(v));
            p.seed = static_cast<std::uint64_t>(seed);
            if (range >= 0) p.range = range;
            if (cases > 0) p.cases = static_cast<std::size_t>(cases);
            std::vector<std::string> names{suite};
            if (suite == "all") names = suite_names();
            bool all_pass = true;
            nlohmann::json reports = nlohmann::json::array();
            for (const auto& n : names) {
                const Report r = n == "negative_control" ? negative_control(p) : run_suite(n, p);
                all_pass = all_pass && r.passed();
                if (json) reports.push_back(r.json());
                else out << r.text();
            }
            if (json) out << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
            return all_pass ? ok : verification_failed;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const UnknownName& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const UnsupportedParameters& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return ok;
}

} // namespace iwahori::cli

#endif // IWAHORI_TOOLS_CLI_HPP
