#include "logtk/runner.hpp"
#include "logtk/serial.hpp"
#include <chrono>
#include <sstream>

namespace logtk {

nlohmann::json Report::to_json() const {
    nlohmann::json j = {{"task", task},
                        {"procedure", procedure},
                        {"status", error.empty() ? status_str(status) : "error"},
                        {"certificate", certificate},
                        {"preconditions", preconditions},
                        {"stats", stats},
                        {"ms", ms}};
    if (!error.empty()) j["error"] = error;
    return j;
}

std::string Report::human() const {
    std::ostringstream os;
    os << "[" << task << "] " << procedure << ": ";
    if (!error.empty())
        os << "error (" << error << ")";
    else
        os << status_str(status);
    return os.str();
}

namespace {

std::vector<Poly> parse_ideal(const PrelogRing& P, const ManifestValue& v) {
    std::vector<Poly> out;
    for (const std::string& s : v.list) out.push_back(P.poly().parse(s));
    return out;
}

Report run_one(const Manifest& m, const Task& t, const RunOptions& opt) {
    Report rep;
    rep.task = t.id;
    rep.procedure = t.procedure;
    auto t0 = std::chrono::steady_clock::now();

    auto arg = [&](const std::string& key) -> const ManifestValue& {
        auto it = t.args.find(key);
        if (it == t.args.end())
            throw PreconditionError("task '" + t.id + "' is missing the '" + key + "' argument");
        return it->second;
    };
    auto has = [&](const std::string& key) { return t.args.count(key) != 0; };

    try {
        Verdict v;
        if (t.procedure == "log-regular") {
            v = is_log_regular(m.prelog(arg("prelog").str), opt.check);
        } else if (t.procedure == "log-regular-ideal") {
            const PrelogRing& P = m.prelog(arg("prelog").str);
            v = is_log_regular_ideal(P, parse_ideal(P, arg("ideal")), opt.check);
        } else if (t.procedure == "kato") {
            v = kato_criterion(m.prelog(arg("prelog").str), opt.check);
        } else if (t.procedure == "log-ci") {
            std::string route = has("route") ? arg("route").str : "direct";
            if (route == "direct") {
                v = is_log_complete_intersection_direct(m.prelog(arg("prelog").str), opt.check);
            } else if (route == "presentation") {
                const PrelogRing& Q = m.prelog(arg("presenting").str);
                v = is_log_complete_intersection_presented(Q, parse_ideal(Q, arg("ideal")),
                                                           opt.check);
            } else {
                throw PreconditionError("log-ci route must be 'direct' or 'presentation'");
            }
        } else if (t.procedure == "log-smooth") {
            const FinMonoid& src = m.monoid(arg("source").str);
            const FinMonoid& tgt = m.monoid(arg("target").str);
            MonoidHom h{src, tgt, {}};
            for (const std::string& w : arg("images").list)
                h.images.push_back(parse_monoid_word(w, tgt.gens));
            v = is_log_smooth_sufficient(h, m.field);
        } else if (t.procedure == "smooth-equivalence") {
            const PrelogRing& P = m.prelog(arg("prelog").str);
            const FinMonoid& src = m.monoid(arg("source").str);
            MonoidHom h{src, P.monoid, {}};
            for (const std::string& w : arg("images").list)
                h.images.push_back(parse_monoid_word(w, P.monoid.gens));
            v = smoothness_equivalence(h, P, opt.check);
        } else if (t.procedure == "crosscheck") {
            v = regularity_smoothness_crosscheck(m.prelog(arg("prelog").str), opt.check);
        } else if (t.procedure == "validate") {
            v = validate(m.prelog(arg("prelog").str));
        } else if (t.procedure == "monoid-integral") {
            v = is_integral(m.monoid(arg("monoid").str));
        } else if (t.procedure == "monoid-saturated") {
            v = is_saturated(m.monoid(arg("monoid").str), opt.check.hilbert_budget);
        } else if (t.procedure == "diff") {
            const PrelogHom& f = m.map(arg("map").str);
            FpModule om = minimal_presentation(log_differentials(f));
            const PolyRing& P = om.poly();
            nlohmann::json rels = nlohmann::json::array();
            for (const Vec& r : om.relations) rels.push_back(P.str(r));
            v.status = Status::holds;
            v.certificate = {{"kind", "log-differentials"},
                             {"rank", om.rank},
                             {"labels", om.labels},
                             {"relations", rels}};
        } else if (t.procedure == "fundamental") {
            const PrelogHom& f = m.map(arg("map").str);
            std::vector<Poly> kernel;
            if (has("kernel"))
                for (const std::string& s : arg("kernel").list)
                    kernel.push_back(f.source.poly().parse(s));
            FundamentalReport fr = fundamental_sequence_low_degree(f, kernel);
            v.status = (fr.h0_consistent && (!fr.surjective_case || fr.h1_consistent))
                           ? Status::holds
                           : Status::fails;
            v.certificate = fr.to_json();
            v.certificate["kind"] = "fundamental-sequence";
        } else if (t.procedure == "first-sequence") {
            v = check_first_sequence(m.map(arg("first").str), m.map(arg("second").str));
        } else if (t.procedure == "conormal-sequence") {
            const PrelogHom& g = m.map(arg("first").str);
            const PrelogHom& f = m.map(arg("second").str);
            SurjectionData s{f, {}};
            if (has("kernel"))
                for (const std::string& str : arg("kernel").list)
                    s.ring_kernel.push_back(f.source.poly().parse(str));
            v = check_conormal_sequence(g, s);
        } else {
            throw PreconditionError("unknown procedure '" + t.procedure + "'");
        }
        rep.status = v.status;
        rep.certificate = std::move(v.certificate);
        rep.preconditions = std::move(v.preconditions_checked);
        // engine statistics surfaced from the certificate
        const nlohmann::json& c = rep.certificate;
        if (c.contains("koszul") && c["koszul"].contains("koszul_basis"))
            rep.stats["koszul_basis_size"] = c["koszul"]["koszul_basis"].size();
        if (c.contains("tor1")) {
            if (c["tor1"].contains("cycles")) rep.stats["tor_cycles"] = c["tor1"]["cycles"].size();
            rep.stats["tor_rank"] = c["tor1"].value("rank", 0);
        }
        if (c.contains("preimage_generators"))
            rep.stats["preimage_generators"] = c["preimage_generators"].size();
        if (c.contains("kernel") && c["kernel"].contains("rank")) {
            rep.stats["gp_kernel_rank"] = c["kernel"]["rank"];
            rep.stats["gp_cokernel_rank"] = c["cokernel"]["rank"];
        }
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

} // namespace

std::vector<Report> run_tasks(const Manifest& m, const std::string& selector,
                              const RunOptions& opt) {
    std::vector<Report> out;
    for (const Task& t : m.tasks) {
        if (!selector.empty() && t.id != selector && t.procedure != selector) continue;
        out.push_back(run_one(m, t, opt));
    }
    // no explicit [task] sections: synthesize one per prelog for plain checks
    if (out.empty() && !selector.empty() && m.tasks.empty()) {
        for (const auto& [name, P] : m.prelogs) {
            Task t;
            t.id = name;
            t.procedure = selector;
            ManifestValue v;
            v.kind = ManifestValue::Kind::Str;
            v.str = name;
            t.args.emplace("prelog", v);
            out.push_back(run_one(m, t, opt));
        }
    }
    return out;
}

int reports_exit_code(const std::vector<Report>& reports) {
    if (reports.empty()) return 2;
    int code = 0;
    for (const Report& r : reports) code = std::max(code, r.exit_code());
    return code;
}

} // namespace logtk
