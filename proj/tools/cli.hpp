// Copyright 2026 The mixschur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_io.hpp"

namespace mixschur::cli {

using io::json;

enum ExitCode : int { kSuccess = 0, kFailedAssertion = 1, kInputError = 2 };

inline Exponent parse_exponent(const std::string& s) {
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "inf" || t == "infinity") return Exponent::infinity();
    try {
        std::size_t pos = 0;
        const double v = std::stod(t, &pos);
        if (pos != t.size()) throw input_error("bad exponent '" + s + "'");
        return Exponent(v);
    } catch (const std::logic_error&) {
        throw input_error("bad exponent '" + s + "'");
    }
}

/// Collects computed quantities and asserted relations.
class Certificate {
public:
    Certificate(std::string command, double tol) : command_(std::move(command)), tol_(tol) {}

    json& results() { return results_; }

    bool le(const std::string& name, double lhs, double rhs) {
        const bool pass = !std::isnan(lhs) && !std::isnan(rhs) &&
                          (std::isinf(rhs) ? rhs > 0 : lhs <= rhs + tol_ * std::max(1.0, std::abs(rhs)));
        add(name, lhs, rhs, "<=", pass);
        return pass;
    }
    bool ge(const std::string& name, double lhs, double rhs) {
        const bool pass = !std::isnan(lhs) && !std::isnan(rhs) &&
                          (std::isinf(lhs) ? lhs > 0 : rhs <= lhs + tol_ * std::max(1.0, std::abs(lhs)));
        add(name, lhs, rhs, ">=", pass);
        return pass;
    }
    bool eq(const std::string& name, double lhs, double rhs) {
        const bool pass = lhs == rhs || std::abs(lhs - rhs) <= tol_ * std::max({1.0, std::abs(lhs), std::abs(rhs)});
        add(name, lhs, rhs, "==", pass);
        return pass;
    }
    bool lt(const std::string& name, double lhs, double rhs) {
        const bool pass = lhs < rhs;
        add(name, lhs, rhs, "<", pass);
        return pass;
    }
    bool flag(const std::string& name, bool value) {
        add(name, value ? 1.0 : 0.0, 1.0, "==", value);
        return value;
    }

    bool pass() const { return pass_; }

    json to_json(const std::string& digest) const {
        json j;
        j["command"] = command_;
        j["version"] = kVersion;
        j["inputs_digest"] = digest;
        j["results"] = results_;
        j["assertions"] = assertions_;
        j["pass"] = pass_;
        return j;
    }

private:
    void add(const std::string& name, double lhs, double rhs, const char* rel, bool pass) {
        assertions_.push_back(json{{"name", name}, {"lhs", lhs}, {"rhs", rhs}, {"relation", rel}, {"tolerance", tol_}, {"pass", pass}});
        pass_ = pass_ && pass;
    }

    std::string command_;
    double tol_;
    json results_ = json::object();
    json assertions_ = json::array();
    bool pass_ = true;
};

struct Inputs {
    std::string bytes;
    json load(const std::string& path) {
        std::string raw;
        auto j = io::load_file(path, &raw);
        bytes += path;
        bytes += '\0';
        bytes += raw;
        bytes += '\0';
        return j;
    }
};

inline json corner_json(const CornerNorms& c) {
    return json{{"l1", c.l1}, {"linf", c.linf}, {"l1inf", c.l1inf}, {"linf1", c.linf1}};
}

inline json constants_json(const SchurConstants& c) {
    return json{{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"c4", c.c4}};
}

template <class T>
bool is_real(const T& v) {
    return !io::has_imaginary(v.values());
}

struct Options {
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    bool json_output = true;
    std::string function, kernel, weight, left, right, covering, space, phase, frame, u, v, m0, L, osc_covering,
        majorant;
    std::string p = "1", q = "1";
    std::size_t trials = 64;
    std::size_t N = 8, M = 64;
};

inline void cmd_norm(const Options& o, Inputs& in, Certificate& c) {
    if (o.function.empty() == o.kernel.empty()) throw input_error("norm needs exactly one of --function or --kernel");
    const Exponent p = parse_exponent(o.p), q = parse_exponent(o.q);
    auto& r = c.results();
    if (!o.function.empty()) {
        auto f = io::function_from_json(in.load(o.function));
        std::optional<WeightFunction> w;
        if (!o.weight.empty()) w = io::weight_from_json(in.load(o.weight));
        if (w && !(w->space() == f.space())) throw input_error("weight lives on a different space");
        const auto fw = w ? f.weighted(*w) : f;
        r["p"] = p.value();
        r["q"] = q.value();
        r["mixed_norm"] = mixed_norm(fw, p, q);
        r["corner_norms"] = corner_json(corner_norms(fw));
        r["intersection_norm"] = intersection_norm(fw);
        r["rho_tensor"] = rho_tensor_abs(fw);
        const double dual = dual_pairing_sup(fw, p, q);
        r["dual_pairing_sup"] = dual;
        c.eq("dual_pairing_equals_mixed_norm", dual, r["mixed_norm"].get<double>());
        return;
    }
    const auto K = io::kernel_from_json(in.load(o.kernel));
    std::optional<WeightGrid> m;
    if (!o.weight.empty()) m = io::weight_grid_from_json(in.load(o.weight));
    const double nb = norm_B(K, m);
    const double na_m = norm_A(m ? K.times(m->kernel()) : K);
    r["norm_A"] = norm_A(K);
    r["norm_A_weighted"] = na_m;
    r["norm_B"] = nb;
    c.le("norm_A_weighted_le_norm_B", na_m, nb);
    std::optional<WeightGrid> mt;
    if (m) mt = m->transposed();
    c.eq("transpose_norm_B", norm_B(transpose(K), mt), nb);
}

inline void cmd_schur(const Options& o, Inputs& in, Certificate& c) {
    const auto K = io::kernel_from_json(in.load(o.kernel));
    const Exponent p = parse_exponent(o.p), q = parse_exponent(o.q);
    auto& r = c.results();
    const auto s = schur_constants(K);
    r["c1"] = s.c1;
    r["c2"] = s.c2;
    r["c3"] = s.c3;
    r["c4"] = s.c4;
    r["p"] = p.value();
    r["q"] = q.value();
    const double bound = schur_bound(s, p, q);
    r["schur_bound"] = bound;
    const double lower = opnorm_lower_search(K, p, q, o.trials, o.seed);
    r["lower_bound"] = lower;
    c.le("lower_bound_le_schur_bound", lower, bound);
    if (!K.is_nonnegative_real()) {
        r["sharpness"] = "skipped: kernel is not nonnegative";
        return;
    }
    const Exponent one(1.0), inf = Exponent::infinity();
    const struct {
        const char* name;
        Exponent p, q;
        double constant;
    } corners[] = {{"1,1", one, one, s.c2}, {"inf,inf", inf, inf, s.c1}, {"1,inf", one, inf, s.c3}, {"inf,1", inf, one, s.c4}};
    json norms = json::object();
    for (const auto& k : corners) {
        try {
            const double v = corner_opnorm(K, k.p, k.q);
            norms[k.name] = v;
            c.eq(std::string("sharpness_") + k.name, v, k.constant);
        } catch (const input_error& e) {
            norms[k.name] = std::string("skipped: ") + e.what();
        }
    }
    r["corner_opnorms"] = norms;
}

inline void cmd_compose(const Options& o, Inputs& in, Certificate& c) {
    const auto K = io::kernel_from_json(in.load(o.left));
    const auto L = io::kernel_from_json(in.load(o.right));
    const auto KL = compose(K, L);
    auto& r = c.results();
    r["kernel"] = is_real(KL) ? io::kernel_to_json(io::real_part(KL)) : io::kernel_to_json(KL);
    const double a = norm_A(KL), ak = norm_A(K), al = norm_A(L);
    const double b = norm_B(KL), bk = norm_B(K), bl = norm_B(L);
    r["norm_A"] = json{{"composite", a}, {"left", ak}, {"right", al}};
    r["norm_B"] = json{{"composite", b}, {"left", bk}, {"right", bl}};
    c.le("norm_A_submultiplicative", a, ak * al);
    c.le("norm_B_submultiplicative", b, bk * bl);
}

inline void cmd_sumnorm(const Options& o, Inputs& in, Certificate& c) {
    const auto F = io::function_from_json(in.load(o.function));
    auto& r = c.results();
    const double rho = rho_tensor_abs(F);
    const auto split = split_four(F);
    const auto n = split.norms();
    const double sum = split.norm_sum();
    r["rho_tensor"] = rho;
    r["intersection_norm"] = intersection_norm(F);
    json parts = json::object();
    const GridFunction<complex>* fs[] = {&split.f1, &split.f2, &split.f3, &split.f4};
    const double ns[] = {n.l1, n.linf, n.l1inf, n.linf1};
    const char* names[] = {"f1", "f2", "f3", "f4"};
    const char* norm_names[] = {"l1", "linf", "l1inf", "linf1"};
    for (int k = 0; k < 4; ++k) {
        json part = is_real(*fs[k]) ? io::function_to_json(io::real_part(*fs[k])) : io::function_to_json(*fs[k]);
        part["norm"] = ns[k];
        part["norm_kind"] = norm_names[k];
        parts[names[k]] = part;
    }
    r["split"] = parts;
    r["norm_sum"] = sum;
    r["sum_norm_upper"] = brute_sum_norm_upper(F, o.trials, o.seed);
    const double assoc = associate_pairing_sup(F, o.trials, o.seed);
    r["associate_pairing_sup"] = assoc;

    double diff = 0.0;
    const auto back = split.sum();
    for (std::size_t i = 0; i < F.values().size(); ++i) diff = std::max(diff, std::abs(back[i] - F[i]));
    c.eq("split_reconstruction", diff, 0.0);
    for (int k = 0; k < 4; ++k) c.le(std::string("split_") + names[k] + "_le_4_rho", ns[k], 4.0 * rho);
    const bool lower = c.le("rho_le_norm_sum", rho, sum);
    const bool upper = c.le("norm_sum_le_16_rho", sum, 16.0 * rho);
    c.ge("associate_ge_rho_over_16", assoc, rho / 16.0);
    r["sandwich_pass"] = lower && upper;
}

inline ProductSpace covering_space(const Options& o, Inputs& in, const json& cov) {
    if (!o.space.empty()) return io::product_from_json(in.load(o.space));
    if (cov.contains("space")) return io::product_from_json(cov.at("space"));
    throw input_error("covering needs --space or a \"space\" field");
}

inline void cmd_covering(const Options& o, Inputs& in, Certificate& c) {
    const json cj = in.load(o.covering);
    const auto sp = covering_space(o, in, cj);
    const auto cov = io::covering_from_json(cj, sp);
    std::optional<WeightFunction> u;
    if (!o.u.empty()) u = io::weight_from_json(in.load(o.u));
    if (u && !(u->space() == sp)) throw input_error("weight lives on a different space");
    const auto rep = validate_covering(cov, u);
    auto& r = c.results();
    r["covers"] = rep.covers;
    r["patch_positive"] = rep.patch_positive;
    r["weight_constant"] = rep.weight_constant;
    r["intersection_number"] = rep.intersection_number;
    if (rep.moderateness) r["moderateness"] = *rep.moderateness;
    c.flag("covers", rep.covers);
    c.flag("patches_positive", rep.all_positive);
    if (!rep.valid()) return;
    const auto cw = covering_weights(cov);
    r["discrete_weight"] = cw.discrete;
    r["continuous_weight"] = io::nested_json(cw.continuous.values(), {sp.n1(), sp.n2()});
    r["condition_constant"] = cw.condition_constant;
    c.le("condition_constant_le_2C0", cw.condition_constant, 2.0 * rep.weight_constant);
    if (u) r["special_weight"] = io::nested_json(special_linfty_weight(cov, *u).values(), {sp.n1(), sp.n2()});
    if (o.kernel.empty()) return;
    const auto K = io::kernel_from_json(in.load(o.kernel));
    std::optional<PhaseGrid> phase;
    if (!o.phase.empty()) phase = PhaseGrid(io::kernel_from_json(in.load(o.phase)));
    const auto MK = maximal_kernel(K, cov);
    r["maximal_kernel"] = io::kernel_to_json(MK);
    r["oscillation"] = io::kernel_to_json(oscillation(K, cov, phase));
    double gap = 0.0;
    for (std::size_t i = 0; i < MK.values().size(); ++i) gap = std::max(gap, std::abs(K.values()[i]) - MK.values()[i]);
    c.le("abs_kernel_minus_maximal_kernel", gap, 0.0);
}

inline void cmd_coorbit(const Options& o, Inputs& in, Certificate& c) {
    const auto frame = io::frame_from_json(in.load(o.frame));
    const auto& X = frame.index();
    const auto cov = o.covering.empty() ? RectCovering::whole(X) : io::covering_from_json(in.load(o.covering), X);
    const auto u = o.u.empty() ? WeightFunction::constant(X, 1.0) : io::weight_from_json(in.load(o.u));
    std::optional<WeightFunction> v;
    if (!o.v.empty()) {
        v = io::weight_from_json(in.load(o.v));
    } else if (validate_covering(cov).valid()) {
        const auto cw = covering_weights(cov);
        std::vector<double> vals(X.size());
        for (std::size_t x = 0; x < X.size(); ++x)
            vals[x] = std::max({1.0, frame.vector_norm(x), u[x] / cw.continuous[x]});
        v = WeightFunction(X, std::move(vals));
    } else {
        v = WeightFunction::constant(X, 1.0);
    }
    const auto m0 = o.m0.empty() ? WeightGrid::constant(X, X, 1.0) : io::weight_grid_from_json(in.load(o.m0));
    const auto K = reproducing_kernel(frame);
    Kernel<double> L(X, X);
    if (!o.L.empty()) {
        const auto Lc = io::kernel_from_json(in.load(o.L));
        if (io::has_imaginary(Lc.values())) throw input_error("majorant L must be real");
        L = io::real_part(Lc);
    } else if (cov.covers()) {
        L = maximal_kernel(K, cov);
    }
    std::optional<DiscretizationInput> disc;
    if (!o.osc_covering.empty()) {
        DiscretizationInput d{io::covering_from_json(in.load(o.osc_covering), X), std::nullopt, std::nullopt};
        if (!o.phase.empty()) d.phase = PhaseGrid(io::kernel_from_json(in.load(o.phase)));
        if (!o.majorant.empty()) d.majorant = io::real_part(io::kernel_from_json(in.load(o.majorant)));
        disc = std::move(d);
    }
    const auto rep = coorbit_report(frame, cov, u, *v, m0, L, disc);
    auto& r = c.results();
    r["parseval_defect"] = parseval_defect(frame);
    r["covering_valid"] = rep.covering_valid;
    r["weight_constant"] = rep.weight_constant;
    r["u_moderateness"] = rep.u_moderateness;
    r["v_constant"] = rep.v_constant;
    r["m0_u_constant"] = rep.m0_u_constant;
    r["kpsi_norm_A_mv"] = rep.kpsi_a_mv;
    r["kpsi_norm_B_m0"] = rep.kpsi_b_m0;
    r["L_norm_B_m0"] = rep.l_b_m0;
    r["all_pass"] = rep.all_pass;
    c.le("parseval_defect", r["parseval_defect"].get<double>(), 1e-10);
    c.flag("covering_valid", rep.covering_valid);
    c.flag("v_at_least_one", rep.v_at_least_one);
    c.flag("m0_symmetric", rep.m0_symmetric);
    c.flag("domination", rep.domination);
    c.flag("norms_finite", rep.norms_finite);
    if (rep.discretization) {
        const auto& d = *rep.discretization;
        r["discretization"] = json{{"covers", d.covers},
                                   {"intersection_number", d.intersection_number},
                                   {"majorant_dominates", d.majorant_dominates},
                                   {"kpsi_norm_B_m", d.kpsi_norm},
                                   {"L_norm_B_m", d.l_norm},
                                   {"margin", d.margin}};
        r["margin_pass"] = d.margin_pass;
        c.flag("osc_covering_covers", d.covers);
        c.flag("majorant_dominates", d.majorant_dominates);
        c.lt("margin_lt_1", d.margin, 1.0);
    }
}

inline void cmd_counterexample(const Options& o, Certificate& c) {
    const auto d = counterexample_diagnostics(o.N, o.M, o.trials, o.seed);
    auto& r = c.results();
    r["N"] = d.N;
    r["M"] = d.M;
    r["constants"] = constants_json(d.constants);
    r["c3_analytic"] = d.c3_analytic;
    r["c1_analytic"] = d.c1_analytic;
    r["l2_truncated"] = d.l2_truncated;
    r["l2_full"] = d.l2_full;
    r["lower_bound_l1inf"] = d.lower_bound;
    c.eq("c3_matches_series", d.constants.c3, d.c3_analytic);
    c.eq("c1_matches_series", d.constants.c1, d.c1_analytic);
    c.le("lower_bound_le_l2", d.lower_bound, d.l2_full);
}

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mixed-norm Schur test verification tool", "mixschur"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "seed for randomized searches")->default_val(0);
    app.add_option("--tolerance", o.tolerance, "relative tolerance for assertions")->default_val(1e-9);
    app.add_flag("--json", o.json_output, "emit JSON (the only output mode)");

    auto* norm = app.add_subcommand("norm", "mixed, A and B norms of a function or kernel");
    norm->add_option("--function", o.function);
    norm->add_option("--kernel", o.kernel);
    norm->add_option("--weight", o.weight, "weight function (for --function) or weight grid (for --kernel)");
    norm->add_option("--p", o.p);
    norm->add_option("--q", o.q);

    auto* schur = app.add_subcommand("schur", "Schur constants, bound and sharpness check");
    schur->add_option("--kernel", o.kernel)->required();
    schur->add_option("--p", o.p);
    schur->add_option("--q", o.q);
    schur->add_option("--trials", o.trials);

    auto* comp = app.add_subcommand("compose", "kernel product over the middle space");
    comp->add_option("--left", o.left)->required();
    comp->add_option("--right", o.right)->required();

    auto* sum = app.add_subcommand("sumnorm", "iterated L1+Linf norm, four-way split and sandwich");
    sum->add_option("--function", o.function)->required();
    sum->add_option("--trials", o.trials);

    auto* covc = app.add_subcommand("covering", "covering validation, weights, maximal and oscillation kernels");
    covc->add_option("--covering", o.covering)->required();
    covc->add_option("--space", o.space);
    covc->add_option("--weight", o.u);
    covc->add_option("--kernel", o.kernel);
    covc->add_option("--phase", o.phase);

    auto* coo = app.add_subcommand("coorbit", "coorbit hypotheses and discretization margin");
    coo->add_option("--frame", o.frame)->required();
    coo->add_option("--covering", o.covering);
    coo->add_option("--u", o.u);
    coo->add_option("--v", o.v);
    coo->add_option("--m0", o.m0);
    coo->add_option("--L", o.L);
    coo->add_option("--osc-covering", o.osc_covering);
    coo->add_option("--phase", o.phase);
    coo->add_option("--majorant", o.majorant);

    auto* ce = app.add_subcommand("counterexample", "truncated complex counterexample diagnostics");
    ce->add_option("--N", o.N)->check(CLI::PositiveNumber);
    ce->add_option("--M", o.M)->check(CLI::Range(2, 1 << 20));
    ce->add_option("--trials", o.trials);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    auto* sub = app.get_subcommands().front();
    Certificate cert(sub->get_name(), o.tolerance);
    Inputs in;
    try {
        if (o.trials < 1) throw input_error("--trials must be at least 1");
        if (sub == norm) cmd_norm(o, in, cert);
        else if (sub == schur) cmd_schur(o, in, cert);
        else if (sub == comp) cmd_compose(o, in, cert);
        else if (sub == sum) cmd_sumnorm(o, in, cert);
        else if (sub == covc) cmd_covering(o, in, cert);
        else if (sub == coo) cmd_coorbit(o, in, cert);
        else cmd_counterexample(o, cert);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    std::string digest_src = in.bytes;
    for (const auto& a : args) digest_src += a + '\0';
    out << io::dump(cert.to_json(io::fnv1a_hex(digest_src))) << "\n";
    return cert.pass() ? kSuccess : kFailedAssertion;
}

}  // namespace mixschur::cli
