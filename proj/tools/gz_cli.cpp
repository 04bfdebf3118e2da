// Command-line surface: invariant evaluation, moment maps, flows, regularity
// predicates, fiber parametrization and the verification driver.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input,
// 3 mathematical precondition failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gz/gz.hpp"
#include "gz/json_io.hpp"
#include "gz/verify.hpp"

namespace {

using gz::AlgebraKind;
using gz::Complex;
using gz::Json;
using gz::MatrixC;

struct Options {
    std::string algebra = "gl";
    std::size_t n = 0;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    std::string order = "asc";
    std::string input;
    std::size_t level = 0;
    std::size_t index = 1;
    std::string time = "0";
};

Json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw std::invalid_argument("cannot open input file: " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("input is not valid JSON");
    return j;
}

MatrixC matrix_from_input(const Json& j) {
    if (j.is_object() && j.contains("matrix")) return gz::matrix_from_json(j["matrix"]);
    return gz::matrix_from_json(j);
}

AlgebraKind kind_for(const Options& opt, std::size_t n) {
    if (opt.algebra == "gl") return AlgebraKind::gl(n);
    if (opt.algebra == "so") return AlgebraKind::so(n);
    throw std::invalid_argument("--algebra must be gl or so");
}

Complex parse_time(const std::string& s) {
    std::istringstream ss(s);
    double re = 0.0, im = 0.0;
    char sep = 0;
    ss >> re;
    if (ss.fail()) throw std::invalid_argument("--time must be re[,im]");
    if (ss >> sep) {
        if (sep != ',') throw std::invalid_argument("--time must be re[,im]");
        ss >> im;
        if (ss.fail()) throw std::invalid_argument("--time must be re[,im]");
    }
    return {re, im};
}

std::vector<std::size_t> parse_order(const std::string& s, std::size_t d) {
    std::vector<std::size_t> order(d);
    if (s == "asc") {
        std::iota(order.begin(), order.end(), std::size_t{0});
    } else if (s == "desc") {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::reverse(order.begin(), order.end());
    } else {
        order.clear();
        std::istringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) order.push_back(std::stoul(tok));
        if (order.size() != d) throw std::invalid_argument("--order permutation has wrong length");
    }
    return order;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

const char* flavor_name(gz::InvariantFlavor f) {
    return f == gz::InvariantFlavor::pfaffian ? "pfaffian" : "trace_power";
}

int cmd_invariants(const Options& opt) {
    const MatrixC x = matrix_from_input(read_input(opt.input));
    const AlgebraKind kind = kind_for(opt, x.size());
    Json out;
    out["kind"] = kind.name();
    out["n"] = kind.n;
    Json list = Json::array();
    for (const auto& id : gz::generators(kind)) {
        Json e;
        e["level"] = id.level;
        e["index"] = id.index;
        e["flavor"] = flavor_name(id.flavor);
        if (id.flavor == gz::InvariantFlavor::trace_power) e["exponent"] = id.exponent;
        e["value"] = gz::complex_to_json(gz::eval_invariant(id, x));
        list.push_back(std::move(e));
    }
    out["invariants"] = std::move(list);
    emit(out);
    return 0;
}

int cmd_moment(const Options& opt, bool coefficients) {
    const MatrixC x = matrix_from_input(read_input(opt.input));
    const AlgebraKind kind = kind_for(opt, x.size());
    Json out;
    out["values"] = gz::complex_list_to_json(coefficients ? gz::coeff_moment(kind, x)
                                                          : gz::moment_map(kind, x));
    emit(out);
    return 0;
}

int cmd_flow(const Options& opt) {
    const MatrixC x = matrix_from_input(read_input(opt.input));
    const AlgebraKind kind = kind_for(opt, x.size());
    const auto id = gz::make_invariant_id(kind, opt.level, opt.index);
    const MatrixC y = gz::flow_step(kind, id, parse_time(opt.time), x);
    Json out;
    out["matrix"] = gz::matrix_to_json(y);
    emit(out);
    return 0;
}

int cmd_act(const Options& opt) {
    const Json in = read_input(opt.input);
    if (!in.is_object() || !in.contains("matrix") || !in.contains("times"))
        throw std::invalid_argument("act expects {\"matrix\": ..., \"times\": [...]}");
    const MatrixC x = gz::matrix_from_json(in["matrix"]);
    const AlgebraKind kind = kind_for(opt, x.size());
    const gz::FlowTime t = gz::flow_time_from_json(in["times"]);
    const MatrixC y = gz::act(kind, t, x, parse_order(opt.order, kind.d()));
    Json out;
    out["matrix"] = gz::matrix_to_json(y);
    emit(out);
    return 0;
}

int cmd_sreg(const Options& opt) {
    const MatrixC x = matrix_from_input(read_input(opt.input));
    const AlgebraKind kind = kind_for(opt, x.size());
    bool low1 = false, low2 = false;
    const bool differential = gz::is_strongly_regular(kind, x, -1.0, &low1);
    const bool centralizers = gz::sreg_via_centralizers(kind, x, -1.0, &low2);
    Json out;
    out["strongly_regular"] = differential;
    out["via_centralizers"] = centralizers;
    out["gz_rank"] = gz::gz_rank(kind, x);
    out["d"] = kind.d();
    out["low_confidence"] = low1 || low2;
    emit(out);
    return 0;
}

int cmd_fiber_build(const Options& opt) {
    const Json in = read_input(opt.input);
    if (!in.is_object() || !in.contains("target") || !in.contains("torus"))
        throw std::invalid_argument("fiber-build expects {\"target\": ..., \"torus\": ...}");
    const gz::FiberTarget c = gz::target_from_json(in["target"]);
    MatrixC x;
    if (c.kind.is_gl())
        x = gz::gamma_gl(c, gz::gl_torus_from_json(in["torus"]));
    else
        x = gz::gamma_so(c, gz::so_torus_from_json(in["torus"]));
    Json out;
    out["matrix"] = gz::matrix_to_json(x);
    out["fiber_residual"] = gz::fiber_residual(x, c);
    emit(out);
    return 0;
}

int cmd_fiber_invert(const Options& opt) {
    const Json in = read_input(opt.input);
    if (!in.is_object() || !in.contains("target") || !in.contains("matrix"))
        throw std::invalid_argument("fiber-invert expects {\"target\": ..., \"matrix\": ...}");
    const gz::FiberTarget c = gz::target_from_json(in["target"]);
    const MatrixC x = gz::matrix_from_json(in["matrix"]);
    Json out;
    if (c.kind.is_gl())
        out["torus"] = gz::gl_torus_to_json(gz::gamma_gl_inverse(x, c, opt.tol));
    else
        out["torus"] = gz::so_torus_to_json(gz::psi_inverse(x, c, opt.tol));
    emit(out);
    return 0;
}

int cmd_torus_act(const Options& opt) {
    const Json in = read_input(opt.input);
    if (!in.is_object() || !in.contains("target") || !in.contains("matrix") || !in.contains("torus"))
        throw std::invalid_argument("torus-act expects {\"target\", \"matrix\", \"torus\"}");
    const gz::FiberTarget c = gz::target_from_json(in["target"]);
    const MatrixC x = gz::matrix_from_json(in["matrix"]);
    MatrixC y;
    if (c.kind.is_gl())
        y = gz::torus_act_gl(gz::gl_torus_from_json(in["torus"]), x, c);
    else
        y = gz::torus_act_so(gz::so_torus_from_json(in["torus"]), x, c);
    Json out;
    out["matrix"] = gz::matrix_to_json(y);
    emit(out);
    return 0;
}

int cmd_nilfibre(const Options& opt, bool have_input) {
    Json out;
    out["nilradical_example"] = gz::check_nilradical_example();
    if (have_input) {
        const MatrixC x = matrix_from_input(read_input(opt.input));
        out["in_nilfibre"] = gz::in_nilfibre(x, opt.tol);
    }
    emit(out);
    return 0;
}

int cmd_verify(const Options& opt) {
    if (opt.n == 0) throw std::invalid_argument("verify requires --n");
    const AlgebraKind kind = kind_for(opt, opt.n);
    const auto results = gz::verify::run_slice(kind, opt.seed);
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass();
        std::printf("%-4s %-42s residual=%.3e tol=%.1e%s%s\n", r.pass() ? "PASS" : "FAIL",
                    r.name.c_str(), r.worst, r.tol, r.note.empty() ? "" : "  ",
                    r.note.c_str());
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gelfand-Zeitlin flows, strong regularity and generic fiber tori on gl(n) and so(n)"};
    app.require_subcommand(1);

    Options opt;
    bool nil_have_input = false;

    auto add_common = [&](CLI::App* cmd, bool needs_algebra) {
        if (needs_algebra)
            cmd->add_option("--algebra", opt.algebra, "algebra family: gl or so");
        cmd->add_option("--tol", opt.tol, "tolerance for residual checks");
        cmd->add_option("--input", opt.input, "input file (defaults to stdin, '-' for stdin)");
        return cmd;
    };

    auto* c_inv = add_common(app.add_subcommand("invariants", "evaluate the generator family"), true);
    auto* c_mom = add_common(app.add_subcommand("moment", "moment map in generator order"), true);
    auto* c_cof = add_common(app.add_subcommand("coeff-moment", "characteristic-coefficient moment map (gl)"), true);
    auto* c_flow = add_common(app.add_subcommand("flow", "single generator flow"), true);
    c_flow->add_option("--level", opt.level, "generator level i")->required();
    c_flow->add_option("--index", opt.index, "generator index j");
    c_flow->add_option("--time", opt.time, "complex time re[,im]");
    auto* c_act = add_common(app.add_subcommand("act", "composed flow of a full time vector"), true);
    c_act->add_option("--order", opt.order, "composition order: asc, desc or a permutation");
    auto* c_sreg = add_common(app.add_subcommand("sreg", "strong-regularity predicates"), true);
    auto* c_fb = add_common(app.add_subcommand("fiber-build", "build a fiber point from torus coordinates"), false);
    auto* c_fi = add_common(app.add_subcommand("fiber-invert", "torus coordinates of a fiber point"), false);
    auto* c_ta = add_common(app.add_subcommand("torus-act", "torus action on a fiber point"), false);
    auto* c_nil = add_common(app.add_subcommand("nilfibre-check", "nilfibre membership and the 4x4 example"), false);
    auto* c_ver = app.add_subcommand("verify", "run the property suite for one algebra");
    c_ver->add_option("--algebra", opt.algebra, "algebra family: gl or so");
    c_ver->add_option("--n", opt.n, "ambient size")->required();
    c_ver->add_option("--seed", opt.seed, "random seed");
    c_ver->add_option("--tol", opt.tol, "tolerance override (informational)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (c_inv->parsed()) return cmd_invariants(opt);
        if (c_mom->parsed()) return cmd_moment(opt, false);
        if (c_cof->parsed()) return cmd_moment(opt, true);
        if (c_flow->parsed()) return cmd_flow(opt);
        if (c_act->parsed()) return cmd_act(opt);
        if (c_sreg->parsed()) return cmd_sreg(opt);
        if (c_fb->parsed()) return cmd_fiber_build(opt);
        if (c_fi->parsed()) return cmd_fiber_invert(opt);
        if (c_ta->parsed()) return cmd_torus_act(opt);
        if (c_nil->parsed()) {
            nil_have_input = !opt.input.empty();
            return cmd_nilfibre(opt, nil_have_input);
        }
        if (c_ver->parsed()) return cmd_verify(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const gz::GenericityError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const gz::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
