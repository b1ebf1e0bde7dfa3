// Command-line front end: build catalog constructions, classify expressions,
// verify identities, emit norm tables, and scan conjectures and coefficient
// identities.  Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "binform/appell.hpp"
#include "binform/catalog.hpp"
#include "binform/errors.hpp"
#include "binform/poly_io.hpp"

namespace {

using namespace binform;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

PolyStyle style_from_name(const std::string& name) {
    if (name == "plain") return PolyStyle::plain;
    if (name == "latex") return PolyStyle::latex;
    if (name == "json") return PolyStyle::json;
    throw DomainError("unknown format '" + name + "'");
}

std::vector<Series> parse_series_list(const std::string& csv) {
    std::vector<Series> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() != 1 || !series_from_letter(item[0]))
            throw DomainError("bad series '" + item + "' (expected a, b, c or d)");
        out.push_back(*series_from_letter(item[0]));
    }
    return out;
}

void write_json_output(const nlohmann::ordered_json& j, const std::string& out) {
    if (out.empty()) return;
    if (out == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw DomainError("cannot open output file '" + out + "'");
    f << j.dump(2) << "\n";
}

nlohmann::ordered_json crosscheck_json(const catalog::CrossCheck& cc) {
    nlohmann::ordered_json j;
    j["closed_form_equals_bracket"] = cc.closed_equals_bracket;
    j["closed_form_equals_bracket_reversed"] = cc.closed_equals_reversed;
    if (!cc.first_difference.empty()) j["first_difference"] = cc.first_difference;
    if (!cc.variants.empty()) {
        nlohmann::ordered_json variants = nlohmann::ordered_json::array();
        for (const auto& v : cc.variants)
            variants.push_back({{"variant", v.label},
                                {"equals_bracket", v.equals_bracket},
                                {"equals_bracket_reversed", v.equals_reversed}});
        j["variants"] = std::move(variants);
    }
    return j;
}

nlohmann::ordered_json built_json(const catalog::Built& b, PolyStyle style) {
    nlohmann::ordered_json j;
    j["construction"] = b.construction;
    j["n"] = b.order;
    std::string series;
    for (Series s : b.series) {
        if (!series.empty()) series += ",";
        series += series_letter(s);
    }
    j["series"] = series;
    j["polynomial"] = style == PolyStyle::json ? nlohmann::ordered_json(polynomial_to_json(b.poly))
                                               : nlohmann::ordered_json(format_polynomial(b.poly, style));
    j["semi_invariant"] = b.semi_invariant;
    if (!b.semi_invariant) j["d_image"] = format_polynomial(b.d_image);
    if (b.certified) {
        j["degree"] = b.certified->degree();
        j["weight"] = b.certified->weight();
        j["ord"] = b.certified->ord();
        j["proper"] = b.certified->proper();
    }
    if (b.degenerate) j["degenerate"] = true;
    if (b.raw_determinant) j["raw_determinant"] = format_polynomial(*b.raw_determinant);
    if (b.crosscheck) j["crosscheck"] = crosscheck_json(*b.crosscheck);
    return j;
}

int cmd_poly(const std::string& family, unsigned degree, const std::string& format) {
    auto f = family.size() == 1 ? appell::family_from_letter(family[0]) : std::nullopt;
    if (!f) {
        std::cerr << "error: unknown family '" << family << "' (expected B, E, H or T)\n";
        return kExitUsage;
    }
    appell::FamilySet families;
    std::cout << format_polynomial(families.cache(*f).poly(degree), style_from_name(format)) << "\n";
    families.save();
    return kExitOk;
}

int cmd_build(const std::string& construction, unsigned order, const std::string& series_csv,
              const std::string& format) {
    std::optional<std::vector<Series>> series;
    if (!series_csv.empty()) series = parse_series_list(series_csv);
    catalog::Built b = catalog::build_construction(construction, order, series);
    PolyStyle style = style_from_name(format);
    if (style == PolyStyle::json) {
        std::cout << built_json(b, style).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "construction: " << b.construction << "\n";
    std::cout << "order: " << b.order << "\n";
    std::cout << "polynomial: " << format_polynomial(b.poly, style) << "\n";
    std::cout << "semi-invariant: " << (b.semi_invariant ? "yes" : "no") << "\n";
    if (!b.semi_invariant) std::cout << "D-image: " << format_polynomial(b.d_image) << "\n";
    if (b.certified) {
        std::cout << "degree: " << b.certified->degree() << "\n";
        std::cout << "weight: " << b.certified->weight() << "\n";
        std::cout << "ord: " << b.certified->ord() << "\n";
        std::cout << "proper: " << (b.certified->proper() ? "yes" : "no") << "\n";
    }
    if (b.degenerate) std::cout << "degenerate: yes\n";
    if (b.crosscheck) {
        const auto& cc = *b.crosscheck;
        std::cout << "closed-form equals bracket: " << (cc.closed_equals_bracket ? "yes" : "no")
                  << "\n";
        std::cout << "closed-form equals reversed bracket: "
                  << (cc.closed_equals_reversed ? "yes" : "no") << "\n";
        if (!cc.first_difference.empty())
            std::cout << "first difference: " << cc.first_difference << "\n";
        for (const auto& v : cc.variants)
            std::cout << "variant " << v.label << ": bracket "
                      << (v.equals_bracket ? "yes" : "no") << ", reversed "
                      << (v.equals_reversed ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& expr, unsigned order, bool debug) {
    std::string text = expr;
    if (!expr.empty() && expr[0] == '@') {
        std::ifstream in(expr.substr(1));
        if (!in) throw DomainError("cannot read expression file '" + expr.substr(1) + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else if (std::filesystem::exists(expr) && std::filesystem::is_regular_file(expr)) {
        std::ifstream in(expr);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    Polynomial p = parse_polynomial(text, order);
    FormContext ctx = context_for(p, order);
    std::cout << "expression: " << format_polynomial(p) << "\n";
    std::cout << "order: " << order << "\n";
    Polynomial d = forms::derive_D(p, ctx);
    bool si = d.is_zero();
    std::cout << "semi-invariant: " << (si ? "yes" : "no") << "\n";
    if (!si) std::cout << "D-image: " << format_polynomial(d) << "\n";
    std::cout << "invariant: " << (si && forms::derive_Dstar(p, ctx).is_zero() ? "yes" : "no") << "\n";
    auto deg = forms::homogeneous_degree(p);
    std::cout << "homogeneous: " << (deg ? "yes" : "no") << "\n";
    if (deg) std::cout << "degree: " << *deg << "\n";
    auto w = forms::weight(p, ctx);
    std::cout << "isobaric: " << (w ? "yes" : "no") << "\n";
    if (w) std::cout << "weight: " << *w << "\n";
    if (debug) {
        auto wi = forms::weight_by_index_count(p, ctx);
        std::cout << "weight-by-index-count: " << (wi ? std::to_string(*wi) : std::string("none"))
                  << "\n";
    }
    if (si && !p.is_zero()) std::cout << "ord: " << forms::ord_by_iteration(p, ctx) << "\n";
    bool proper = false;
    for (Series s : ctx.active_series())
        if (!p.derivative(Variable::coefficient(s, order)).is_zero()) proper = true;
    std::cout << "proper: " << (proper ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& construction, unsigned order,
               const std::vector<std::string>& assign, const std::string& expect,
               const std::string& format) {
    catalog::Built built = catalog::build_construction(construction, order);
    appell::Assignment assignment = appell::parse_assignment(assign);
    std::optional<Rational> expected;
    if (!expect.empty()) expected = parse_rational(expect);
    appell::FamilySet families;
    appell::IdentityReport report = appell::verify_identity(built, assignment, families, expected);
    families.save();
    if (format == "json") {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << "construction: " << report.construction << " (order " << report.order << ")\n";
        std::cout << "constant: " << (report.constant ? "yes" : "no") << "\n";
        if (report.constant)
            std::cout << "norm: " << to_string(report.norm) << "\n";
        else
            std::cout << "image: " << format_polynomial(report.image) << "\n";
        if (report.expected) {
            std::cout << "expected: " << to_string(*report.expected) << "\n";
            std::cout << (report.match.value_or(false) ? "PASS" : "FAIL") << "\n";
        }
    }
    if (report.expected && !report.match.value_or(false)) return kExitMismatch;
    if (!report.expected && !report.constant) return kExitMismatch;
    return kExitOk;
}

int cmd_scan(const std::string& construction, const std::vector<std::string>& assign, unsigned from,
             unsigned to, unsigned jobs, const std::string& out) {
    appell::Assignment assignment = appell::parse_assignment(assign);
    appell::FamilySet families;
    auto rows = appell::norm_table(construction, assignment, from, to, jobs, families);
    families.save();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(r.to_json());
    if (out == "-") {
        std::cout << arr.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& r : rows) {
        std::cout << construction << " n=" << r.order << ": ";
        if (!r.defined)
            std::cout << "undefined (" << r.undefined_reason << ")";
        else if (r.constant)
            std::cout << "norm " << to_string(r.norm);
        else
            std::cout << "non-constant image " << format_polynomial(r.image);
        std::cout << "\n";
    }
    write_json_output(arr, out);
    return kExitOk;
}

int cmd_conjecture(const std::string& name, unsigned from, unsigned to) {
    auto id = appell::conjecture_from_name(name);
    if (!id) {
        std::cerr << "error: unknown conjecture '" << name
                  << "' (expected euler-dv, hermite-discr or be-dv)\n";
        return kExitUsage;
    }
    appell::FamilySet families;
    auto rows = appell::conjecture_scan(*id, from, to, families);
    families.save();
    bool all_match = true;
    for (const auto& r : rows) {
        if (!r.defined) {
            std::cout << "n=" << r.n << ": undefined\n";
            continue;
        }
        std::cout << "n=" << r.n << ": lhs " << to_string(r.lhs) << ", rhs " << to_string(r.rhs)
                  << (r.match ? " MATCH" : " MISMATCH");
        if (r.variant_rhs)
            std::cout << " | adjusted rhs " << to_string(*r.variant_rhs)
                      << (r.variant_match.value_or(false) ? " MATCH" : " MISMATCH");
        std::cout << "\n";
        all_match = all_match && r.match;
    }
    return all_match ? kExitOk : kExitMismatch;
}

int cmd_binomial(const std::string& which, unsigned from, unsigned to, const std::string& out) {
    auto id = appell::binomial_from_name(which);
    if (!id) {
        std::cerr << "error: unknown identity '" << which
                  << "' (expected ones, tr, ch, tr2, trbar2, trbar2-adjusted or ch4)\n";
        return kExitUsage;
    }
    auto rows = appell::binomial_scan(*id, from, to);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    bool all_zero = true;
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["identity"] = which;
        j["n"] = r.n;
        if (!r.defined) {
            j["status"] = "undefined";
            j["reason"] = r.undefined_reason;
            std::cout << which << " n=" << r.n << ": undefined (" << r.undefined_reason << ")\n";
        } else {
            j["value"] = to_string(r.value);
            std::cout << which << " n=" << r.n << ": " << to_string(r.value) << "\n";
            all_zero = all_zero && r.value == 0;
        }
        arr.push_back(std::move(j));
    }
    write_json_output(arr, out);
    return all_zero ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact semi-invariant engine for binary forms and Appell-sequence identities"};
    app.require_subcommand(1);

    auto* poly = app.add_subcommand("poly", "Render one Appell polynomial");
    std::string poly_family;
    unsigned poly_degree = 0;
    std::string poly_format = "plain";
    poly->add_option("--family", poly_family, "B, E, H or T")->required();
    poly->add_option("--degree", poly_degree, "index k of A_k(x)")->required();
    poly->add_option("--format", poly_format, "plain, latex or json");

    auto* build = app.add_subcommand("build", "Build a catalog construction symbolically");
    std::string build_name, build_series, build_format = "plain";
    unsigned build_order = 0;
    build->add_option("--construction", build_name, "construction id")->required();
    build->add_option("--order", build_order, "form order n")->required();
    build->add_option("--series", build_series, "comma-separated series letters");
    build->add_option("--format", build_format, "plain, latex or json");

    auto* check = app.add_subcommand("check", "Classify an expression under a form context");
    std::string check_expr;
    unsigned check_order = 0;
    bool check_debug = false;
    check->add_option("--expr", check_expr, "expression literal, file path, or @file")->required();
    check->add_option("--order", check_order, "form order n")->required();
    check->add_flag("--debug", check_debug, "print diagnostic weight variants");

    auto* verify = app.add_subcommand("verify", "Verify one identity at one order");
    std::string verify_name, verify_expect, verify_format = "text";
    unsigned verify_order = 0;
    std::vector<std::string> verify_assign;
    verify->add_option("--construction", verify_name)->required();
    verify->add_option("--order", verify_order)->required();
    verify->add_option("--assign", verify_assign, "series=family pairs, e.g. a=B b=E")
        ->required()
        ->expected(-1);
    verify->add_option("--expect", verify_expect, "expected exact norm, e.g. 1/16");
    verify->add_option("--format", verify_format, "text or json");

    auto* scan = app.add_subcommand("scan", "Norm table over a range of orders");
    std::string scan_name, scan_out;
    unsigned scan_from = 1, scan_to = 1, scan_jobs = 0;
    std::vector<std::string> scan_assign;
    scan->add_option("--construction", scan_name)->required();
    scan->add_option("--assign", scan_assign)->required()->expected(-1);
    scan->add_option("--from", scan_from)->required();
    scan->add_option("--to", scan_to)->required();
    scan->add_option("--jobs", scan_jobs, "worker threads (0 = all cores)");
    scan->add_option("--out", scan_out, "JSON output file, or - for stdout");

    auto* conjecture = app.add_subcommand("conjecture", "Scan one conjectured identity");
    std::string conj_name;
    unsigned conj_from = 1, conj_to = 1;
    conjecture->add_option("--name", conj_name, "euler-dv, hermite-discr or be-dv")->required();
    conjecture->add_option("--from", conj_from);
    conjecture->add_option("--to", conj_to)->required();

    auto* binomial = app.add_subcommand("binomial", "Evaluate a coefficient identity exactly");
    std::string bin_which, bin_out;
    unsigned bin_from = 2, bin_to = 2;
    binomial->add_option("--which", bin_which, "ones, tr, ch, tr2, trbar2, trbar2-adjusted, ch4")
        ->required();
    binomial->add_option("--from", bin_from)->required();
    binomial->add_option("--to", bin_to)->required();
    binomial->add_option("--out", bin_out, "JSON output file, or - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (poly->parsed()) return cmd_poly(poly_family, poly_degree, poly_format);
        if (build->parsed()) return cmd_build(build_name, build_order, build_series, build_format);
        if (check->parsed()) return cmd_check(check_expr, check_order, check_debug);
        if (verify->parsed())
            return cmd_verify(verify_name, verify_order, verify_assign, verify_expect, verify_format);
        if (scan->parsed())
            return cmd_scan(scan_name, scan_assign, scan_from, scan_to, scan_jobs, scan_out);
        if (conjecture->parsed()) return cmd_conjecture(conj_name, conj_from, conj_to);
        if (binomial->parsed()) return cmd_binomial(bin_which, bin_from, bin_to, bin_out);
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
