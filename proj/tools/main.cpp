#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hankel/objectives.hpp"
#include "hankel/optimizer.hpp"
#include "hankel/verification.hpp"

namespace {

using hankel::ClassId;
using hankel::SampleMode;

ClassId parse_class(const std::string& s) { return s == "r" ? ClassId::R : ClassId::R1; }

SampleMode parse_mode(const std::string& s) {
    return s == "uniform" ? SampleMode::uniform : SampleMode::boundary_biased;
}

hankel::Objective parse_objective(const std::string& s) {
    if (s == "g") return hankel::Objective::g;
    if (s == "g1") return hankel::Objective::g1;
    if (s == "h") return hankel::Objective::h;
    return hankel::Objective::h1;
}

int write_payload(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 3;
    }
    f << payload;
    f.flush();
    if (!f) {
        std::cerr << "error: failed writing output file: " << out_path << "\n";
        return 3;
    }
    return 0;
}

std::string verify_csv(const hankel::BoundReport& r) {
    using hankel::format_double;
    std::string s = "key,value\n";
    auto row = [&s](const std::string& k, const std::string& v) { s += k + "," + v + "\n"; };
    auto branch_rows = [&](const char* name, const hankel::BoxMaxResult& b) {
        const std::string p = std::string("branch_") + name;
        row(p + "_max", format_double(b.max_value));
        row(p + "_argmax_s", format_double(b.argmax_s));
        row(p + "_argmax_u", format_double(b.argmax_u));
        row(p + "_kind", hankel::kind_name(b.argmax_kind));
    };
    row("class", hankel::class_name(r.class_id));
    row("normalizer", std::to_string(r.normalizer));
    branch_rows(r.class_id == ClassId::R ? "g" : "h", r.branch_a);
    branch_rows(r.class_id == ClassId::R ? "g1" : "h1", r.branch_b);
    row("bound_num", std::to_string(r.bound_num));
    row("bound_den", std::to_string(r.bound_den));
    row("bound_float", format_double(r.bound_float));
    row("extremal_value", format_double(r.extremal_value));
    row("sampling_n", std::to_string(r.sampling.n_samples));
    row("sampling_seed", std::to_string(r.sampling.seed));
    row("sampling_mode", hankel::mode_name(r.sampling.mode));
    row("sampling_sup", format_double(r.sampling.sup_abs_h3));
    row("sampling_violations", std::to_string(r.sampling.violations));
    row("consistency_max_err", format_double(r.consistency_max_err));
    row("passed", r.passed ? "true" : "false");
    return s;
}

int run_verify(const std::string& cls_str, const hankel::VerifyConfig& cfg,
               const std::string& format, const std::string& out_path) {
    const hankel::BoundReport rep = hankel::verify_bound(parse_class(cls_str), cfg);
    std::string payload;
    if (format == "json") {
        payload = hankel::report_json(rep);
    } else if (format == "csv") {
        payload = verify_csv(rep);
    } else {
        payload = hankel::report_text(rep);
    }
    const int rc = write_payload(payload, out_path);
    if (rc != 0) return rc;
    return rep.passed ? 0 : 1;
}

// mirrors the case split of the maximization: corners, edges, then interior
// critical points
std::string box_text(hankel::Objective which, const hankel::BoxMaxResult& res) {
    using hankel::format_double;
    using hankel::PointKind;
    std::string s = std::string("objective ") + hankel::objective_name(which) + "\n";
    const PointKind order[3] = {PointKind::vertex, PointKind::edge, PointKind::interior};
    const char* labels[3] = {"I vertices", "II edges", "III interior"};
    for (int k = 0; k < 3; ++k) {
        s += labels[k];
        s += "\n";
        bool any = false;
        for (const hankel::CriticalPoint& c : res.candidates) {
            if (c.kind != order[k]) continue;
            any = true;
            s += "  (" + format_double(c.s) + ", " + format_double(c.u) + ")  value " +
                 format_double(c.value);
            if (c.kind == PointKind::interior) s += "  residual " + format_double(c.residual);
            s += "\n";
        }
        if (!any) s += "  none\n";
    }
    s += "maximum " + format_double(res.max_value) + " at (" + format_double(res.argmax_s) +
         ", " + format_double(res.argmax_u) + ") [" + hankel::kind_name(res.argmax_kind) + "]\n";
    return s;
}

int run_max_objective(const std::string& obj_str, int grid_n, double tol,
                      const std::string& format, const std::string& out_path) {
    const hankel::Objective which = parse_objective(obj_str);
    const hankel::BoxMaxResult res = hankel::maximize_on_box(hankel::build(which), grid_n, tol);
    std::string payload;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["objective"] = hankel::objective_name(which);
        j["max_value"] = res.max_value;
        j["argmax"] = {res.argmax_s, res.argmax_u};
        j["kind"] = hankel::kind_name(res.argmax_kind);
        nlohmann::ordered_json cands = nlohmann::ordered_json::array();
        for (const hankel::CriticalPoint& c : res.candidates) {
            nlohmann::ordered_json o;
            o["kind"] = hankel::kind_name(c.kind);
            o["s"] = c.s;
            o["u"] = c.u;
            o["value"] = c.value;
            o["residual"] = c.residual;
            cands.push_back(o);
        }
        j["candidates"] = cands;
        payload = j.dump(2) + "\n";
    } else if (format == "csv") {
        using hankel::format_double;
        payload = "kind,s,u,value,residual\n";
        for (const hankel::CriticalPoint& c : res.candidates) {
            payload += std::string(hankel::kind_name(c.kind)) + "," + format_double(c.s) + "," +
                       format_double(c.u) + "," + format_double(c.value) + "," +
                       format_double(c.residual) + "\n";
        }
    } else {
        payload = box_text(which, res);
    }
    return write_payload(payload, out_path);
}

bool parse_real(const std::string& s, double& v) {
    if (s.empty()) return false;
    char* end = nullptr;
    v = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

// accepts "re" or "re,im"
bool parse_complex(const std::string& tok, hankel::cplx& out) {
    const std::string::size_type comma = tok.find(',');
    double re = 0.0, im = 0.0;
    if (comma == std::string::npos) {
        if (!parse_real(tok, re)) return false;
    } else {
        if (!parse_real(tok.substr(0, comma), re)) return false;
        if (!parse_real(tok.substr(comma + 1), im)) return false;
    }
    out = hankel::cplx(re, im);
    return true;
}

int run_hankel(const std::vector<std::string>& tokens, const std::string& format,
               const std::string& out_path) {
    using hankel::format_double;
    if (tokens.size() != 4) {
        std::cerr << "error: hankel expects exactly 4 coefficient tokens (a2 a3 a4 a5), got "
                  << tokens.size() << "\n";
        return 2;
    }
    hankel::cplx a[4];
    for (std::size_t i = 0; i < 4; ++i) {
        if (!parse_complex(tokens[i], a[i])) {
            std::cerr << "error: malformed coefficient token '" << tokens[i]
                      << "' (expected re or re,im)\n";
            return 2;
        }
    }
    const hankel::cplx v = hankel::h3(a[0], a[1], a[2], a[3]);
    std::string payload;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["h3"]["re"] = v.real();
        j["h3"]["im"] = v.imag();
        j["abs"] = std::abs(v);
        payload = j.dump(2) + "\n";
    } else if (format == "csv") {
        payload = "re,im,abs\n" + format_double(v.real()) + "," + format_double(v.imag()) + "," +
                  format_double(std::abs(v)) + "\n";
    } else {
        payload = "H3 = (" + format_double(v.real()) + ", " + format_double(v.imag()) + ")\n" +
                  "|H3| = " + format_double(std::abs(v)) + "\n";
    }
    return write_payload(payload, out_path);
}

int run_sample(const std::string& cls_str, std::uint64_t n, std::uint64_t seed, double tol,
               const std::string& mode_str, const std::string& format,
               const std::string& out_path) {
    const ClassId cls = parse_class(cls_str);
    const SampleMode mode = parse_mode(mode_str);
    const double bound_float = cls == ClassId::R ? 44.0 / 135.0 : 1.0 / 64.0;

    if (format == "csv") {
        hankel::SamplingSummary sum;
        if (out_path.empty()) {
            sum = hankel::sample_h3(cls, n, seed, mode, bound_float, tol, &std::cout);
            if (!std::cout) return 3;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot open output file: " << out_path << "\n";
                return 3;
            }
            sum = hankel::sample_h3(cls, n, seed, mode, bound_float, tol, &f);
            f.flush();
            if (!f) {
                std::cerr << "error: failed writing output file: " << out_path << "\n";
                return 3;
            }
        }
        return sum.violations == 0 ? 0 : 1;
    }

    const hankel::SamplingSummary sum =
        hankel::sample_h3(cls, n, seed, mode, bound_float, tol, nullptr);
    using hankel::format_double;
    std::string payload;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["class"] = hankel::class_name(cls);
        j["n"] = sum.n_samples;
        j["seed"] = sum.seed;
        j["mode"] = hankel::mode_name(sum.mode);
        j["sup"] = sum.sup_abs_h3;
        j["violations"] = sum.violations;
        j["envelope_violations"] = sum.envelope_violations;
        const hankel::cplx ts[4] = {sum.argsup.t1, sum.argsup.t2, sum.argsup.t3, sum.argsup.t4};
        nlohmann::ordered_json arg = nlohmann::ordered_json::array();
        for (const hankel::cplx& t : ts) arg.push_back({t.real(), t.imag()});
        j["argsup"] = arg;
        payload = j.dump(2) + "\n";
    } else {
        payload = std::string("class ") + hankel::class_name(cls) + "\n";
        payload += "sampling n=" + std::to_string(sum.n_samples) +
                   " seed=" + std::to_string(sum.seed) + " mode=" + hankel::mode_name(sum.mode) +
                   "\n";
        payload += "sup |H3| = " + format_double(sum.sup_abs_h3) + "\n";
        payload += "violations " + std::to_string(sum.violations) + " (bound " +
                   format_double(bound_float) + " + tol " + format_double(tol) + ")\n";
        payload += "envelope_violations " + std::to_string(sum.envelope_violations) + "\n";
        const hankel::cplx ts[4] = {sum.argsup.t1, sum.argsup.t2, sum.argsup.t3, sum.argsup.t4};
        payload += "argsup";
        for (int i = 0; i < 4; ++i) {
            payload += " t" + std::to_string(i + 1) + "=(" + format_double(ts[i].real()) + "," +
                       format_double(ts[i].imag()) + ")";
        }
        payload += "\n";
    }
    const int rc = write_payload(payload, out_path);
    if (rc != 0) return rc;
    return sum.violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Sharp third Hankel determinant bounds for inverse coefficients of bounded turning "
        "functions"};
    app.require_subcommand(1);

    const std::vector<std::string> class_values = {"r", "r1"};
    const std::vector<std::string> objective_values = {"g", "g1", "h", "h1"};
    const std::vector<std::string> mode_values = {"uniform", "boundary-biased"};
    const std::vector<std::string> format_values = {"json", "csv", "text"};

    // verify
    std::string v_class;
    hankel::VerifyConfig v_cfg;
    std::string v_mode = "boundary-biased", v_format = "text", v_out;
    CLI::App* verify = app.add_subcommand("verify", "verify the sharp |H3| bound for one class");
    verify->add_option("class", v_class, "function class: r (Re f' > 0) or r1 (Re (zf')' > 0)")
        ->required()
        ->check(CLI::IsMember(class_values));
    verify->add_option("--grid-n", v_cfg.grid_n, "Newton multistart lattice resolution")
        ->check(CLI::Range(64, 4096));
    verify->add_option("--n", v_cfg.n_samples, "Monte Carlo sample count")
        ->check(CLI::Range(std::uint64_t(100000), std::uint64_t(2000000000)));
    verify->add_option("--seed", v_cfg.seed, "sampling seed");
    verify->add_option("--tol", v_cfg.tol, "sampling tolerance on bound violations")
        ->check(CLI::PositiveNumber);
    verify->add_option("--mode", v_mode, "sampling mode")->check(CLI::IsMember(mode_values));
    verify->add_option("--format", v_format, "output format")
        ->check(CLI::IsMember(format_values));
    verify->add_option("--out", v_out, "write output to this file instead of stdout");

    // max-objective
    std::string m_obj;
    int m_grid_n = 128;
    double m_tol = 1e-10;
    std::string m_format = "text", m_out;
    CLI::App* maxobj =
        app.add_subcommand("max-objective", "maximize one branch objective over the unit square");
    maxobj->add_option("objective", m_obj, "objective name: g, g1, h or h1")
        ->required()
        ->check(CLI::IsMember(objective_values));
    maxobj->add_option("--grid-n", m_grid_n, "Newton multistart lattice resolution")
        ->check(CLI::Range(64, 4096));
    maxobj->add_option("--tol", m_tol, "Newton residual tolerance")->check(CLI::PositiveNumber);
    maxobj->add_option("--format", m_format, "output format")
        ->check(CLI::IsMember(format_values));
    maxobj->add_option("--out", m_out, "write output to this file instead of stdout");

    // hankel
    std::string h_format = "text", h_out;
    CLI::App* hank = app.add_subcommand(
        "hankel", "third Hankel determinant of coefficients a2 a3 a4 a5 (tokens: re or re,im)");
    hank->add_option("--format", h_format, "output format")->check(CLI::IsMember(format_values));
    hank->add_option("--out", h_out, "write output to this file instead of stdout");
    hank->allow_extras();  // coefficient tokens may start with '-'

    // sample
    std::string s_class;
    std::uint64_t s_n = 1000000, s_seed = 42;
    double s_tol = 1e-10;
    std::string s_mode = "boundary-biased", s_format = "text", s_out;
    CLI::App* sample =
        app.add_subcommand("sample", "Monte Carlo sweep of |H3| over Schur parameters");
    sample->add_option("class", s_class, "function class: r or r1")
        ->required()
        ->check(CLI::IsMember(class_values));
    sample->add_option("--n", s_n, "sample count")
        ->check(CLI::Range(std::uint64_t(1), std::uint64_t(2000000000)));
    sample->add_option("--seed", s_seed, "sampling seed");
    sample->add_option("--tol", s_tol, "tolerance on bound violations")
        ->check(CLI::PositiveNumber);
    sample->add_option("--mode", s_mode, "sampling mode")->check(CLI::IsMember(mode_values));
    sample->add_option("--format", s_format, "output format (csv streams per-sample rows)")
        ->check(CLI::IsMember(format_values));
    sample->add_option("--out", s_out, "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            v_cfg.mode = parse_mode(v_mode);
            return run_verify(v_class, v_cfg, v_format, v_out);
        }
        if (app.got_subcommand(maxobj)) {
            return run_max_objective(m_obj, m_grid_n, m_tol, m_format, m_out);
        }
        if (app.got_subcommand(hank)) {
            return run_hankel(hank->remaining(), h_format, h_out);
        }
        if (app.got_subcommand(sample)) {
            return run_sample(s_class, s_n, s_seed, s_tol, s_mode, s_format, s_out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
