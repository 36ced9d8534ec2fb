#include "qident/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qident/serialize.hpp"

namespace qident {

int default_order() {
    if (const char* s = std::getenv("QIDENT_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 100000) return static_cast<int>(v);
    }
    return 60;
}

namespace {

std::string describe_report(const VerificationReport& r) {
    std::ostringstream os;
    os << r.name;
    if (r.delta) os << " [delta=" << (*r.delta > 0 ? "+1" : "-1") << "]";
    os << ": " << (r.pass ? "pass" : "fail");
    os << " (order " << r.order << ", " << r.elapsed_ms << " ms)";
    if (r.first_mismatch) {
        os << "\n  first mismatch at q^" << r.first_mismatch->degree
           << "\n    lhs: " << r.first_mismatch->lhs.to_string()
           << "\n    rhs: " << r.first_mismatch->rhs.to_string();
    }
    return os.str();
}

int emit(const std::string& text, const std::string& output_path, std::ostream& out,
         std::ostream& err) {
    if (output_path.empty()) {
        out << text << "\n";
        return 0;
    }
    std::ofstream f(output_path);
    if (!f) {
        err << "error: cannot open output file " << output_path << "\n";
        return 2;
    }
    f << text << "\n";
    return 0;
}

int reports_result(const std::vector<VerificationReport>& reports, bool json,
                   const std::string& output_path, std::ostream& out, std::ostream& err) {
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;
    std::string text;
    if (json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        text = arr.dump();
    } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) os << "\n";
            os << describe_report(reports[i]);
        }
        os << "\n" << (all_pass ? "all pass" : "FAILURES present");
        text = os.str();
    }
    int rc = emit(text, output_path, out, err);
    if (rc != 0) return rc;
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact q-series and weighted partition identity engine"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output_path;
    int order = default_order();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", output_path, "write the report to a file instead of stdout");
    app.add_option("--order", order, "truncation order for series comparisons")
        ->check(CLI::PositiveNumber);

    auto* cmd_list = app.add_subcommand("list", "list the identity catalog");

    std::string identity;
    auto* cmd_verify = app.add_subcommand("verify", "verify one identity or the whole catalog");
    cmd_verify->add_option("--identity", identity, "catalog entry name, or 'all'")->required();

    std::string side = "lhs";
    int delta = 1;
    auto* cmd_coeffs = app.add_subcommand("coeffs", "dump the coefficients of one side");
    cmd_coeffs->add_option("--identity", identity, "catalog entry name")->required();
    cmd_coeffs->add_option("--side", side, "lhs or rhs")->check(CLI::IsMember({"lhs", "rhs"}));
    cmd_coeffs->add_option("--delta", delta, "sign instantiation for delta entries")
        ->check(CLI::IsMember({1, -1}));

    int n = 0;
    std::string family_tag;
    std::string weight_tag;
    auto* cmd_parts = app.add_subcommand("partitions", "enumerate a partition family");
    cmd_parts->add_option("--n", n, "the integer being partitioned")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_parts->add_option("--family", family_tag, "partition family tag")->required();
    cmd_parts->add_option("--weight", weight_tag, "weight tag for the per-partition weights");
    cmd_parts->add_option("--delta", delta, "sign for the gap-2 family weights")
        ->check(CLI::IsMember({1, -1}));

    int n_max = 28;
    auto* cmd_check = app.add_subcommand(
        "check-theorems", "enumeration-vs-series checks and partition property suites");
    cmd_check->add_option("--n-max", n_max, "largest n checked exhaustively")
        ->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.push_back("qident");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const bool json = format == "json";
    try {
        if (cmd_list->parsed()) {
            std::string text;
            if (json) {
                Json arr = Json::array();
                for (const IdentitySpec& e : catalog()) {
                    Json j;
                    j["identity"] = e.name;
                    j["delta_variants"] = e.delta_variants;
                    j["notes"] = e.notes;
                    arr.push_back(std::move(j));
                }
                text = arr.dump();
            } else {
                std::ostringstream os;
                for (const IdentitySpec& e : catalog()) {
                    os << e.name;
                    if (!e.delta_variants.empty()) os << " (delta = +1, -1)";
                    os << "\n    " << e.notes << "\n";
                }
                text = os.str();
            }
            return emit(text, output_path, out, err);
        }

        if (cmd_verify->parsed()) {
            std::vector<VerificationReport> reports;
            if (identity == "all") {
                reports = verify_all(order);
            } else {
                find_identity(identity);  // reject unknown names before computing
                reports = verify_variants(identity, order);
            }
            return reports_result(reports, json, output_path, out, err);
        }

        if (cmd_coeffs->parsed()) {
            const IdentitySpec& e = find_identity(identity);
            if (!e.delta_variants.empty() &&
                std::find(e.delta_variants.begin(), e.delta_variants.end(), delta) ==
                    e.delta_variants.end()) {
                err << "error: entry " << identity << " has no delta variant " << delta << "\n";
                return 2;
            }
            QSeries s = build_side(identity, side == "lhs" ? Side::lhs : Side::rhs, order, delta);
            std::string text;
            if (json) {
                text = coeffs_to_json(s).dump();
            } else {
                std::ostringstream os;
                for (int d = s.lower(); d < s.order(); ++d)
                    os << "q^" << d << ": " << s.coeff(d).to_string() << "\n";
                text = os.str();
            }
            return emit(text, output_path, out, err);
        }

        if (cmd_parts->parsed()) {
            auto fam = family_from_name(family_tag);
            if (!fam) {
                err << "error: unknown family tag '" << family_tag << "'\n";
                return 2;
            }
            std::optional<WeightId> w;
            if (!weight_tag.empty()) {
                w = weight_from_name(weight_tag);
                if (!w) {
                    err << "error: unknown weight tag '" << weight_tag << "'\n";
                    return 2;
                }
            }
            std::string text;
            if (json) {
                text = partitions_to_json(n, *fam, w, delta).dump();
            } else {
                std::ostringstream os;
                LaurentPoly total;
                for (const Partition& p : enumerate_family(n, *fam)) {
                    os << p.to_string();
                    if (w) {
                        LaurentPoly wt = weight(p, *w, delta);
                        os << "  weight " << wt.to_string();
                        total += wt;
                    }
                    os << "\n";
                }
                if (w) os << "total " << total.to_string() << "\n";
                os << count_family(n, *fam) << " partition(s) of " << n << " in "
                   << family_name(*fam);
                text = os.str();
            }
            return emit(text, output_path, out, err);
        }

        if (cmd_check->parsed()) {
            std::vector<VerificationReport> reports;
            for (Theorem t : {Theorem::T1, Theorem::T2, Theorem::T3})
                reports.push_back(verify_theorem_vs_series(t, n_max));
            reports.push_back(verify_gg_combinatorial(std::min(n_max, 24)));
            for (auto& r : verify_partition_properties(n_max)) reports.push_back(std::move(r));
            return reports_result(reports, json, output_path, out, err);
        }
    } catch (const UnknownIdentity& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const FamilyMismatch& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qident
