#include <CLI11.hpp>
#include "logtk/runner.hpp"
#include "logtk/serial.hpp"
#include "logtk/snf.hpp"
#include <fstream>
#include <iostream>
#include <sstream>

using namespace logtk;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int do_replay(const std::string& path, bool json_out);

struct CommonFlags {
    std::string field;
    int degree_bound = 8;
    long hilbert_budget = 10000;
    std::string order = "degrevlex";
    std::string replay_file;
    bool json = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--field", field, "coefficient field: Q or Fp(p)");
        cmd->add_option("--degree-bound", degree_bound,
                        "degree bound for the monoid preimage search");
        cmd->add_option("--hilbert-budget", hilbert_budget,
                        "element budget for Hilbert-basis completions");
        cmd->add_option("--order", order,
                        "term order family: degrevlex (graded) / negdegrevlex (local)");
        cmd->add_option("--replay", replay_file,
                        "re-verify the given certificate instead of recomputing");
        cmd->add_flag("--json", json, "emit one JSON report per task");
    }

    RunOptions options() const {
        if (order != "degrevlex" && order != "negdegrevlex")
            throw std::runtime_error(
                "only the canonical orders degrevlex/negdegrevlex are supported");
        RunOptions o;
        o.check.degree_bound = degree_bound;
        o.check.hilbert_budget = hilbert_budget;
        o.json = json;
        return o;
    }

    Manifest load(const std::string& path) const {
        std::string text = slurp(path);
        if (field.empty()) return parse_manifest(text);
        Field K = field_from_str(field);
        return parse_manifest(text, &K);
    }
};

int emit(const std::vector<Report>& reports, bool json) {
    for (const Report& r : reports) {
        if (json)
            std::cout << r.to_json().dump(2) << "\n";
        else
            std::cout << r.human() << "\n";
    }
    if (reports.empty()) {
        std::cerr << "no matching task\n";
        return 2;
    }
    return reports_exit_code(reports);
}

IntMat parse_matrix(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<Int> r;
        std::stringstream rs(row);
        std::string entry;
        while (std::getline(rs, entry, ',')) r.emplace_back(entry);
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw std::runtime_error("empty matrix");
    IntMat m(int(rows.size()), int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw std::runtime_error("ragged matrix rows");
        for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = rows[i][j];
    }
    return m;
}

void print_matrix(const char* name, const IntMat& m) {
    std::cout << name << " =\n";
    for (int i = 0; i < m.rows(); ++i) {
        std::cout << "  [";
        for (int j = 0; j < m.cols(); ++j) std::cout << (j ? ", " : "") << m(i, j).get_str();
        std::cout << "]\n";
    }
}

int do_replay(const std::string& path, bool json_out) {
    nlohmann::json doc = nlohmann::json::parse(slurp(path));
    nlohmann::json cert = doc.contains("certificate") ? doc.at("certificate") : doc;
    Verdict v = replay_certificate(cert);
    bool has_recorded = doc.contains("status");
    bool match = !has_recorded || doc.at("status") == status_str(v.status);
    if (json_out) {
        nlohmann::json out = {{"replayed_status", status_str(v.status)},
                              {"matches_recorded", match}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "replayed: " << status_str(v.status)
                  << (has_recorded ? (match ? " (matches recorded status)"
                                            : " (MISMATCH with recorded status)")
                                   : "")
                  << "\n";
    }
    if (!match) return 2;
    return v.status == Status::holds ? 0 : v.status == Status::fails ? 1 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"logtk: exact toolkit for prelog rings and logarithmic regularity"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "run one decision procedure from a manifest");
    std::string proc, manifest_path, task_sel;
    CommonFlags check_flags;
    check->add_option("procedure", proc,
                      "log-regular | log-regular-ideal | kato | log-ci | log-smooth | "
                      "smooth-equivalence | crosscheck | validate | monoid-integral | "
                      "monoid-saturated")
        ->required();
    check->add_option("manifest", manifest_path, "manifest file")->required();
    check->add_option("--task", task_sel, "run only the named task");
    check_flags.attach(check);

    auto* runc = app.add_subcommand("run", "run every task in a manifest");
    std::string run_path, run_sel;
    CommonFlags run_flags;
    runc->add_option("manifest", run_path, "manifest file")->required();
    runc->add_option("--task", run_sel, "run only the named task");
    run_flags.attach(runc);

    auto* diff = app.add_subcommand("diff", "minimal presentation of the log differentials");
    std::string diff_path, diff_map;
    CommonFlags diff_flags;
    diff->add_option("manifest", diff_path, "manifest file")->required();
    diff->add_option("--map", diff_map, "name of the [map.*] section");
    diff_flags.attach(diff);

    auto* replay = app.add_subcommand("replay", "re-verify an emitted certificate");
    std::string cert_path;
    bool replay_json = false;
    replay->add_option("certificate", cert_path, "JSON report or bare certificate")->required();
    replay->add_flag("--json", replay_json, "JSON output");

    auto* abgroup = app.add_subcommand("abgroup", "finitely generated abelian group utilities");
    auto* snf = abgroup->add_subcommand("snf", "Smith normal form of an integer matrix");
    std::string matrix_text;
    bool snf_json = false;
    snf->add_option("--matrix", matrix_text, "rows separated by ';', entries by ','")
        ->required();
    snf->add_flag("--json", snf_json, "JSON output");

    auto* printc = app.add_subcommand("print", "parse and reprint a manifest in normal form");
    std::string print_path;
    printc->add_option("manifest", print_path, "manifest file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            if (!check_flags.replay_file.empty())
                return do_replay(check_flags.replay_file, check_flags.json);
            Manifest m = check_flags.load(manifest_path);
            std::string selector = task_sel.empty() ? proc : task_sel;
            auto reports = run_tasks(m, selector, check_flags.options());
            std::vector<Report> kept;
            for (Report& r : reports)
                if (r.procedure == proc) kept.push_back(std::move(r));
            return emit(kept, check_flags.json);
        }
        if (*runc) {
            if (!run_flags.replay_file.empty())
                return do_replay(run_flags.replay_file, run_flags.json);
            Manifest m = run_flags.load(run_path);
            return emit(run_tasks(m, run_sel, run_flags.options()), run_flags.json);
        }
        if (*diff) {
            Manifest m = diff_flags.load(diff_path);
            std::string name = diff_map;
            if (name.empty()) {
                if (m.maps.size() != 1)
                    throw std::runtime_error("--map required when several maps are defined");
                name = m.maps.begin()->first;
            }
            FpModule om = minimal_presentation(log_differentials(m.map(name)));
            const PolyRing& P = om.poly();
            if (diff_flags.json) {
                nlohmann::json rels = nlohmann::json::array();
                for (const Vec& r : om.relations) rels.push_back(P.str(r));
                nlohmann::json j = {{"rank", om.rank}, {"labels", om.labels},
                                    {"relations", rels}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "rank " << om.rank << "\n";
                for (const std::string& l : om.labels) std::cout << "  generator " << l << "\n";
                for (const Vec& r : om.relations)
                    std::cout << "  relation  " << P.str(r) << "\n";
            }
            return 0;
        }
        if (*replay) return do_replay(cert_path, replay_json);
        if (*snf) {
            IntMat A = parse_matrix(matrix_text);
            SmithForm s = smith_normal_form(A);
            if (snf_json) {
                auto mat = [](const IntMat& m) {
                    nlohmann::json rows = nlohmann::json::array();
                    for (int i = 0; i < m.rows(); ++i) {
                        nlohmann::json r = nlohmann::json::array();
                        for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
                        rows.push_back(r);
                    }
                    return rows;
                };
                nlohmann::json j = {{"D", mat(s.D)}, {"U", mat(s.U)}, {"V", mat(s.V)}};
                std::cout << j.dump(2) << "\n";
            } else {
                print_matrix("D", s.D);
                print_matrix("U", s.U);
                print_matrix("V", s.V);
            }
            return 0;
        }
        if (*printc) {
            Manifest m = parse_manifest(slurp(print_path));
            std::cout << print_manifest(m);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
