// Command-line front end: list the catalog, verify extremality certificates
// against the expected properties, export Choi matrices and families, and
// batch-verify everything.
//
// Exit codes: 0 all expectations met, 1 verification mismatch, 2 usage error
// (including unknown case ids).

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "emcert/compose.hpp"
#include "emcert/json_io.hpp"
#include "emcert/kernels.hpp"

namespace {

using namespace emcert;
using compose::resolve_case;
using catalog::CatalogCase;

Mode pick_mode(const std::string& flag, const KrausFamily& f) {
    if (flag == "exact") return Mode::Exact;
    if (flag == "float") return Mode::Float;
    return compose::default_mode(f.d_in, f.d_out);
}

struct CaseCheck {
    bool pass = true;
    std::vector<std::string> diffs;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            diffs.push_back(what);
        }
    }
};

bool marginals_close(const DenseMatrix& got, const DenseMatrix& want, Mode mode) {
    if (mode == Mode::Exact) return got == want;
    if (got.rows() != want.rows() || got.cols() != want.cols()) return false;
    for (int i = 0; i < got.rows(); ++i)
        for (int j = 0; j < got.cols(); ++j)
            if (std::abs(got.at(i, j).to_complex() - want.at(i, j).to_complex()) > 1e-9)
                return false;
    return true;
}

CaseCheck check_expectations(const CatalogCase& c, const Certificate& cert) {
    CaseCheck chk;
    const auto& e = c.expected;
    chk.expect(cert.choi_rank == e.choi_rank,
               "choi_rank: expected " + std::to_string(e.choi_rank) + ", computed " +
                   std::to_string(cert.choi_rank));
    chk.expect(cert.bound == e.bound, "bound: expected " + std::to_string(e.bound) +
                                          ", computed " + std::to_string(cert.bound));
    // An indeterminate expectation makes no claim; any computed verdict is fine.
    if (e.verdict != Verdict::Indeterminate)
        chk.expect(cert.verdict == e.verdict, std::string("verdict: expected ") +
                                                  to_string(e.verdict) + ", computed " +
                                                  to_string(cert.verdict));
    chk.expect(marginals_close(cert.marginal_left, e.marginal_left, cert.mode),
               "left marginal differs from the expected matrix");
    chk.expect(marginals_close(cert.marginal_right, e.marginal_right, cert.mode),
               "right marginal differs from the expected matrix");
    if (e.gram_independent)
        chk.expect(cert.gram_independent == *e.gram_independent,
                   "gram_independent: expected " + std::to_string(*e.gram_independent) +
                       ", computed " + std::to_string(cert.gram_independent));
    if (e.dual_gram_independent)
        chk.expect(cert.dual_gram_independent == *e.dual_gram_independent,
                   "dual_gram_independent: expected " +
                       std::to_string(*e.dual_gram_independent) + ", computed " +
                       std::to_string(cert.dual_gram_independent));
    bool herm = true;
    for (const auto& v : c.family.ops) herm = herm && v.is_hermitian();
    chk.expect(herm == e.hermitian_ops, "hermitian_ops: expected " +
                                            std::to_string(e.hermitian_ops) + ", computed " +
                                            std::to_string(herm));
    return chk;
}

void print_certificate(const Certificate& cert, const CatalogCase& c) {
    std::cout << "case:              " << cert.case_id << "\n"
              << "mode:              " << to_string(cert.mode) << "\n"
              << "map:               M(" << cert.d_in << ") -> M(" << cert.d_out << ")\n"
              << "family size:       " << cert.family_size << "\n"
              << "family indep:      " << (cert.family_independent ? "yes" : "no") << "\n"
              << "gram indep:        " << (cert.gram_independent ? "yes" : "no") << "\n"
              << "dual gram indep:   " << (cert.dual_gram_independent ? "yes" : "no") << "\n"
              << "pair indep:        " << (cert.bilinear_independent ? "yes" : "no") << "\n"
              << "choi rank:         " << cert.choi_rank << " (claimed "
              << c.expected.choi_rank << ")\n"
              << "rank bound:        " << cert.bound << "\n"
              << "verdict:           " << to_string(cert.verdict) << " (claimed "
              << to_string(c.expected.verdict) << ")\n";
    if (cert.has_witness) {
        std::cout << "witness:           " << (cert.witness.empty() ? cert.witness_float.size()
                                                                    : cert.witness.size())
                  << " coefficients\n";
    }
    if (!cert.note.empty()) std::cout << "note:              " << cert.note << "\n";
}

int cmd_verify(const std::string& id, const std::string& mode_flag, bool as_json, double tol) {
    CatalogCase c;
    try {
        c = resolve_case(id);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    Mode mode = pick_mode(mode_flag, c.family);
    MarginalPair expected{c.expected.marginal_left, c.expected.marginal_right};
    Certificate cert = certify(c.family, expected, mode, c.id, tol);
    CaseCheck chk = check_expectations(c, cert);
    if (as_json) {
        json j = to_json(cert);
        j["expectations_met"] = chk.pass;
        if (!chk.pass) j["mismatches"] = chk.diffs;
        std::cout << j.dump(2) << "\n";
    } else {
        print_certificate(cert, c);
        if (chk.pass) {
            std::cout << "expectations:      all met\n";
        } else {
            std::cout << "expectations:      MISMATCH\n";
            for (const auto& d : chk.diffs) std::cout << "  - " << d << "\n";
        }
    }
    return chk.pass ? 0 : 1;
}

int cmd_choi(const std::string& id, const std::string& out_path, const std::string& format) {
    CatalogCase c;
    try {
        c = resolve_case(id);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::string payload;
    if (format == "csv") {
        payload = to_csv(to_float(choi_matrix(c.family)));
    } else {
        payload = to_json(choi_matrix(c.family)).dump(2) + "\n";
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return 2;
    }
    out << payload;
    if (!out.good()) {
        std::cerr << "error: write failed for '" << out_path << "'\n";
        return 2;
    }
    return 0;
}

int cmd_list(bool as_json) {
    auto infos = catalog::list_cases();
    if (as_json) {
        json arr = json::array();
        for (const auto& info : infos) {
            json j;
            j["id"] = info.id;
            json p = json::object();
            for (const auto& [k, v] : info.params) p[k] = v;
            j["params"] = std::move(p);
            if (info.is_generator) j["generator"] = true;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << "cases:\n";
    for (const auto& info : infos) {
        if (info.is_generator) continue;
        std::cout << "  " << info.id << "\n";
    }
    std::cout << "generators:\n";
    for (const auto& info : infos) {
        if (!info.is_generator) continue;
        std::cout << "  " << info.id << "(";
        bool first = true;
        for (const auto& [k, v] : info.params) {
            if (!first) std::cout << ", ";
            std::cout << k << " " << v;
            first = false;
        }
        std::cout << ")\n";
    }
    return 0;
}

int cmd_report_all(const std::string& mode_flag, bool as_json, double tol,
                   const std::string& filter) {
    std::vector<std::string> ids;
    for (const auto& info : catalog::list_cases()) {
        if (info.is_generator) continue;
        if (!filter.empty() && info.id.find(filter) == std::string::npos) continue;
        ids.push_back(info.id);
    }
    std::sort(ids.begin(), ids.end());

    bool all_pass = true;
    json rows = json::array();
    if (!as_json)
        std::cout << "case | d1 | d2 | CR (claimed) | bound | verdict | mode | pass\n";
    for (const auto& id : ids) {
        CatalogCase c = resolve_case(id);
        Mode mode = pick_mode(mode_flag, c.family);
        Certificate cert =
            certify(c.family, MarginalPair{c.expected.marginal_left, c.expected.marginal_right},
                    mode, c.id, tol);
        CaseCheck chk = check_expectations(c, cert);
        all_pass = all_pass && chk.pass;
        if (as_json) {
            json row;
            row["id"] = c.id;
            row["d_in"] = cert.d_in;
            row["d_out"] = cert.d_out;
            row["choi_rank"] = cert.choi_rank;
            row["claimed_choi_rank"] = c.expected.choi_rank;
            row["bound"] = cert.bound;
            row["verdict"] = to_string(cert.verdict);
            row["claimed_verdict"] = to_string(c.expected.verdict);
            row["mode"] = to_string(cert.mode);
            row["pass"] = chk.pass;
            if (!chk.pass) row["mismatches"] = chk.diffs;
            rows.push_back(std::move(row));
        } else {
            std::cout << c.id << " | " << cert.d_in << " | " << cert.d_out << " | "
                      << cert.choi_rank << " (" << c.expected.choi_rank << ") | " << cert.bound
                      << " | " << to_string(cert.verdict) << " | " << to_string(cert.mode)
                      << " | " << (chk.pass ? "pass" : "FAIL") << "\n";
            for (const auto& d : chk.diffs) std::cout << "    mismatch: " << d << "\n";
        }
    }
    if (as_json) {
        json out;
        out["all_pass"] = all_pass;
        out["cases"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (all_pass ? "all cases passed" : "FAILURES present") << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_export(const std::string& id) {
    CatalogCase c;
    try {
        c = resolve_case(id);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << case_to_json(c).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal marginal state and CP map certification"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads for float eliminations (0 = auto)");

    std::string mode_flag = "auto";
    bool as_json = false;
    double tol = -1.0;
    std::string case_id, out_path, format = "json", filter;

    auto* list = app.add_subcommand("list", "list catalog cases and presets");
    bool list_json = false;
    list->add_flag("--json", list_json, "machine-readable listing");

    auto* verify = app.add_subcommand("verify", "certify one case and compare expectations");
    verify->add_option("case", case_id, "case id")->required();
    verify->add_option("--mode", mode_flag, "exact|float|auto")
        ->check(CLI::IsMember({"exact", "float", "auto"}));
    verify->add_flag("--json", as_json, "emit the certificate as JSON");
    verify->add_option("--tol", tol, "float rank threshold override");

    auto* choi = app.add_subcommand("choi", "write the Choi matrix of a case");
    choi->add_option("case", case_id, "case id")->required();
    choi->add_option("--out", out_path, "output path (default stdout)");
    choi->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* report = app.add_subcommand("report-all", "certify every case and preset");
    report->add_option("--mode", mode_flag, "exact|float|auto")
        ->check(CLI::IsMember({"exact", "float", "auto"}));
    report->add_flag("--json", as_json, "machine-readable report");
    report->add_option("--tol", tol, "float rank threshold override");
    report->add_option("--cases", filter, "only run cases whose id contains this substring");

    auto* cat = app.add_subcommand("catalog", "catalog data commands");
    auto* exp = cat->add_subcommand("export", "emit the Kraus family JSON for a case");
    exp->add_option("case", case_id, "case id")->required();
    bool export_json = true;
    exp->add_flag("--json", export_json, "emit JSON (the only format)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (threads > 0) emcert::kernels::set_thread_count(threads);

    try {
        if (list->parsed()) return cmd_list(list_json);
        if (verify->parsed()) return cmd_verify(case_id, mode_flag, as_json, tol);
        if (choi->parsed()) return cmd_choi(case_id, out_path, format);
        if (report->parsed()) return cmd_report_all(mode_flag, as_json, tol, filter);
        if (cat->parsed() && exp->parsed()) return cmd_export(case_id);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
