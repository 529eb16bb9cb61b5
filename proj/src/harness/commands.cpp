// Copyright 2026 The phasekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phasekit/harness/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "phasekit/apps.hpp"
#include "phasekit/errors.hpp"
#include "phasekit/harness/canonical_json.hpp"
#include "phasekit/harness/suites.hpp"
#include "phasekit/phase_gadget.hpp"
#include "phasekit/rng.hpp"
#include "phasekit/spectral.hpp"

namespace phasekit::harness {

namespace {

using nlohmann::json;

constexpr double kRestorationFloor = 1.0 - 1e-9;
constexpr double kGadgetPhaseTolerance = 1e-10;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

void emit(const OutputOptions &opts, const std::string &text, std::ostream &out) {
    if (opts.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open '" + opts.out_path + "' for writing");
    }
    file << text;
    if (!file) {
        throw UsageError("write to '" + opts.out_path + "' failed");
    }
}

void emit_json(const OutputOptions &opts, const json &doc, std::ostream &out) {
    emit(opts, dump_canonical(doc, opts.compact ? -1 : 2) + "\n", out);
}

std::size_t checked_domain(unsigned log2n) {
    if (log2n == 0 || log2n > 20) {
        throw UsageError("--n must be between 1 and 20 (log2 of the domain size)");
    }
    return std::size_t{1} << log2n;
}

FunctionTable subset_table(std::size_t n, std::size_t count, Rng &rng) {
    if (count > n) {
        throw UsageError("--solutions " + std::to_string(count) + " exceeds the domain size " + std::to_string(n));
    }
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
        idx[i] = i;
    }
    for (std::size_t i = n; i-- > 1;) {
        std::swap(idx[i], idx[rng.below(i + 1)]);
    }
    std::vector<std::size_t> values(n, 0);
    for (std::size_t i = 0; i < count; ++i) {
        values[idx[i]] = 1;
    }
    return FunctionTable(2, std::move(values));
}

FunctionTable demo_table(const DemoOptions &o, Rng &rng, std::string &origin) {
    if (!o.table_path.empty()) {
        origin = "file:" + o.table_path;
        return load_table(o.table_path);
    }
    const std::size_t n = checked_domain(o.n);
    if (o.app == "dj") {
        origin = o.function;
        if (o.function == "constant0") {
            return FunctionTable(2, std::vector<std::size_t>(n, 0));
        }
        if (o.function == "constant1") {
            return FunctionTable(2, std::vector<std::size_t>(n, 1));
        }
        if (o.function == "balanced") {
            return subset_table(n, n / 2, rng);
        }
        throw UsageError("--function must be constant0, constant1 or balanced");
    }
    if (o.target) {
        if (*o.target >= n) {
            throw UsageError("--target must be below N = " + std::to_string(n));
        }
        origin = "target";
        return delta_table(n, *o.target);
    }
    origin = "random-subset";
    return subset_table(n, o.solutions, rng);
}

StateVector pure_ancilla(const std::string &kind, std::size_t dim, std::uint64_t seed) {
    if (kind == "random") {
        return random_state(dim, seed);
    }
    if (kind == "zero") {
        return basis_state(RegisterLayout({{"a", dim}}), {0});
    }
    throw UsageError("--ancilla must be random or zero for this demo");
}

json search_json(const SearchResult &r) {
    return {{"success_probability", r.success_probability},
            {"iterations", r.iterations},
            {"probabilities", r.probabilities},
            {"solution_count", r.solution_count},
            {"oracle_calls", r.oracle_calls},
            {"phase_transforms", r.phase_transforms},
            {"f_evaluations", r.f_evaluations},
            {"ancilla_restoration_fidelity", r.ancilla_restoration_fidelity},
            {"notes", r.notes}};
}

std::uint64_t amplitude_budget(const BenchOptions &o) {
    if (o.budget != 0) {
        return o.budget;
    }
    if (const char *env = std::getenv("PHASEKIT_MEM_BUDGET"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (*end != '\0' || v == 0) {
            throw UsageError(std::string("PHASEKIT_MEM_BUDGET must be a positive integer, got '") + env + "'");
        }
        return v;
    }
    return kDefaultAmplitudeBudget;
}

}  // namespace

double parse_angle(const std::string &raw) {
    std::string text;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            text += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    auto number = [&](const std::string &s) {
        char *end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
            throw std::invalid_argument("bad angle '" + raw + "'");
        }
        return v;
    };
    const auto pos = text.find("pi");
    if (pos == std::string::npos) {
        return number(text);
    }
    std::string head = text.substr(0, pos);
    const std::string tail = text.substr(pos + 2);
    if (!head.empty() && head.back() == '*') {
        head.pop_back();
    }
    double scale = 1.0;
    if (head == "-") {
        scale = -1.0;
    } else if (!head.empty() && head != "+") {
        scale = number(head);
    }
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw std::invalid_argument("bad angle '" + raw + "'");
        }
        const double den = number(tail.substr(1));
        if (den == 0.0) {
            throw std::invalid_argument("bad angle '" + raw + "': division by zero");
        }
        scale /= den;
    }
    return scale * std::numbers::pi;
}

int cmd_verify(const VerifyOptions &o, std::ostream &out, std::ostream &err) {
    const auto &names = known_suites();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
        std::string list;
        for (const auto &n : names) {
            list += (list.empty() ? "" : ", ") + n;
        }
        err << "phasekit: unknown suite '" << o.suite << "' (expected one of " << list << ")\n";
        return kExitUsage;
    }
    Tolerances tolerances;
    for (const auto &t : o.tolerances) {
        tolerances.set(t);
    }
    const auto report = run_suite(o.suite, o.seed, tolerances);
    emit_json(o.output, report.to_json(), out);
    err << "verify " << o.suite << ": " << report.cases().size() - report.failures() << "/" << report.cases().size()
        << " cases passed\n";
    for (const auto &c : report.cases()) {
        if (!c.pass) {
            err << "  FAIL " << c.name << ": measured " << c.measured << ", bound " << c.bound << "\n";
        }
    }
    return report.passed() ? kExitPass : kExitFailure;
}

int cmd_demo(const DemoOptions &o, std::ostream &out, std::ostream &err) {
    Rng rng(o.seed);
    std::string origin;
    const FunctionTable f = demo_table(o, rng, origin);
    json doc = {{"app", o.app},
                {"seed", o.seed},
                {"table", {{"source", origin}, {"N", f.domain_size()}, {"M", f.modulus()}, {"values", f.values()}}},
                {"ancilla", o.ancilla}};
    double restoration = 0.0;
    std::string summary;

    if (o.app == "dj") {
        DJVerdict v;
        if (o.ancilla == "mixed") {
            v = deutsch_jozsa(f, random_density(2, 2, rng.next()));
        } else {
            v = deutsch_jozsa(f, pure_ancilla(o.ancilla, 2, rng.next()));
        }
        doc["result"] = {{"verdict", v.constant ? "constant" : "balanced"},
                         {"p_zero", v.p_zero},
                         {"distribution", v.distribution},
                         {"oracle_calls", v.oracle_calls},
                         {"ancilla_restoration_fidelity", v.ancilla_restoration_fidelity}};
        restoration = v.ancilla_restoration_fidelity;
        summary = std::string("dj: ") + (v.constant ? "constant" : "balanced");
    } else if (o.app == "grover") {
        std::size_t iters = 0;
        if (o.iterations) {
            iters = *o.iterations;
        } else {
            std::size_t t = 0;
            for (auto v : f.values()) {
                t += v != 0 ? 1 : 0;
            }
            if (t > 0) {
                const double theta =
                    std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(f.domain_size())));
                iters = static_cast<std::size_t>(std::max(0.0, std::round(std::numbers::pi / (4.0 * theta) - 0.5)));
            }
        }
        const auto r = grover(f, iters, pure_ancilla(o.ancilla, 2, rng.next()));
        doc["result"] = search_json(r);
        restoration = r.ancilla_restoration_fidelity;
        summary = "grover: success " + std::to_string(r.success_probability);
    } else if (o.app == "ck") {
        if (o.mbits == 0 || o.mbits > 20) {
            throw UsageError("--mbits must be between 1 and 20");
        }
        const CKParams params{parse_angle(o.gamma), parse_angle(o.beta), o.pivot};
        if (params.pivot >= f.domain_size()) {
            throw UsageError("--pivot must be below N = " + std::to_string(f.domain_size()));
        }
        const auto anc = pure_ancilla(o.ancilla, std::size_t{1} << o.mbits, rng.next());
        const auto r = ck_single_query(f, params, o.mbits, anc);
        const auto exact = ck_exact_phase_probabilities(f, params);
        double exact_success = 0.0;
        for (std::size_t x = 0; x < exact.size(); ++x) {
            exact_success += f(x) != 0 ? exact[x] : 0.0;
        }
        doc["result"] = search_json(r);
        doc["result"]["exact_phase_success_probability"] = exact_success;
        doc["parameters"] = {{"gamma", params.gamma}, {"beta", params.beta}, {"pivot", params.pivot}, {"m_bits", o.mbits}};
        restoration = r.ancilla_restoration_fidelity;
        summary = "ck: success " + std::to_string(r.success_probability);
    } else {
        throw UsageError("unknown demo '" + o.app + "' (expected dj, grover or ck)");
    }

    emit_json(o.output, doc, out);
    const bool restored = restoration >= kRestorationFloor;
    err << summary << ", ancilla restoration fidelity " << restoration << (restored ? "" : " (BELOW 1 - 1e-9)")
        << "\n";
    return restored ? kExitPass : kExitFailure;
}

int cmd_gadget(const GadgetOptions &o, std::ostream &out, std::ostream &err) {
    if (o.modulus == 0 || o.modulus > 4096) {
        throw UsageError("--m must be between 1 and 4096");
    }
    const auto variant = parse_gadget_variant(o.variant);
    if (!variant) {
        throw UsageError("unknown variant '" + o.variant + "' (expected comm-a, comm-b, comm-c, comm-d or sform)");
    }
    const GadgetPlan plan(*variant, o.k, o.modulus);
    const auto state = random_state(RegisterLayout({{"register", o.modulus}}), o.seed);
    const auto after = j_gadget(state, "register", plan, o.z);
    const auto cmp = equal_up_to_global_phase(state, after, kGadgetPhaseTolerance);
    const auto kz = static_cast<std::int64_t>(plan.k()) * reduce_mod(o.z, o.modulus);
    const double expected = std::arg(omega(o.modulus, static_cast<std::int64_t>(reduce_mod(kz, o.modulus))));
    const double error = std::abs(std::remainder(cmp.phase - expected, 2.0 * std::numbers::pi));
    const bool pass = cmp.equal && error <= kGadgetPhaseTolerance;

    const json doc = {{"M", o.modulus},
                      {"k", plan.k()},
                      {"z", reduce_mod(o.z, o.modulus)},
                      {"variant", std::string(to_string(*variant))},
                      {"seed", o.seed},
                      {"measured_phase", cmp.phase},
                      {"expected_phase", expected},
                      {"phase_error", error},
                      {"overlap", cmp.overlap},
                      {"pass", pass}};
    emit_json(o.output, doc, out);
    err << "gadget " << to_string(*variant) << ": phase " << cmp.phase << " (expected " << expected << ")"
        << (pass ? "" : " MISMATCH") << "\n";
    return pass ? kExitPass : kExitFailure;
}

int cmd_bench(const BenchOptions &o, std::ostream &out, std::ostream &err) {
    if (o.max_n == 0 || o.max_m == 0 || o.reps == 0) {
        throw UsageError("--max-n, --max-m and --reps must be positive");
    }
    const std::uint64_t budget = amplitude_budget(o);
    const unsigned largest = o.max_n + o.max_m;
    if (largest >= 63 || (std::uint64_t{1} << largest) > budget) {
        throw UsageError("refusing bench: N*M = 2^" + std::to_string(largest) + " amplitudes exceeds the budget of " +
                         std::to_string(budget));
    }
    Rng rng(o.seed);
    std::string lines;
    std::size_t records = 0;
    for (unsigned ln = 1; ln <= o.max_n; ++ln) {
        for (unsigned lm = 1; lm <= o.max_m; ++lm) {
            const std::size_t n = std::size_t{1} << ln;
            const std::size_t m = std::size_t{1} << lm;
            const auto f = random_table(n, m, rng.next());
            const auto state = random_state(RegisterLayout({{"control", n}, {"ancilla", m}}), rng.next());
            const GadgetPlan plan(GadgetVariant::CommA, 1, m);
            double best = std::numeric_limits<double>::infinity();
            std::size_t calls = 0;
            for (unsigned r = 0; r < o.reps; ++r) {
                const auto start = std::chrono::steady_clock::now();
                const auto result = phase_transform(state, "control", "ancilla", f, plan);
                const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
                best = std::min(best, took.count());
                calls = result.oracle_calls;
            }
            const json record = {{"operation", "phase_transform"}, {"N", n},           {"M", m},
                                 {"r", 1},                         {"reps", o.reps},    {"wall_time", best},
                                 {"oracle_calls", calls}};
            lines += dump_canonical(record, -1) + "\n";
            ++records;
        }
    }
    emit(o.output, lines, out);
    err << "bench: " << records << " records, budget " << budget << " amplitudes\n";
    return kExitPass;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"phasekit: phase transforms with an uninitialized ancilla"};
    app.require_subcommand(1);

    auto add_output = [](CLI::App *sub, OutputOptions &opts) {
        sub->add_option("--out", opts.out_path, "Write the JSON report to FILE instead of stdout");
        sub->add_flag("--json", opts.compact, "Single-line JSON");
    };

    VerifyOptions verify;
    auto *v = app.add_subcommand("verify", "Run verification suites");
    v->add_option("--suite", verify.suite, "primitives, gadget, phase-transform, mixed, optimality, apps or all");
    v->add_option("--seed", verify.seed, "Seed");
    v->add_option("--tol", verify.tolerances, "Tolerance override key=value (exact, matrix, eigen, distinct)");
    add_output(v, verify.output);

    DemoOptions demo;
    auto *d = app.add_subcommand("demo", "Run an application");
    d->add_option("app", demo.app, "dj, grover or ck")->required()->check(CLI::IsMember({"dj", "grover", "ck"}));
    d->add_option("--table", demo.table_path, "Function table file");
    d->add_option("--n", demo.n, "log2 of the domain size for generated tables");
    d->add_option("--function", demo.function, "dj: constant0, constant1 or balanced");
    d->add_option("--target", demo.target, "grover/ck: single marked item");
    d->add_option("--solutions", demo.solutions, "grover/ck: number of random marked items");
    d->add_option("--iters", demo.iterations, "grover: iteration count");
    d->add_option("--ancilla", demo.ancilla, "random, zero or mixed (dj only)");
    d->add_option("--gamma", demo.gamma, "ck: query phase, e.g. pi, pi/2, 2.0");
    d->add_option("--beta", demo.beta, "ck: diffusion phase");
    d->add_option("--pivot", demo.pivot, "ck: pivot l");
    d->add_option("--mbits", demo.mbits, "ck: phase precision in bits");
    d->add_option("--seed", demo.seed, "Seed");
    add_output(d, demo.output);

    GadgetOptions gadget;
    auto *g = app.add_subcommand("gadget", "Apply J_{k,z} to a random state");
    g->add_option("--m", gadget.modulus, "Modulus M");
    g->add_option("--k", gadget.k, "k");
    g->add_option("--z", gadget.z, "z");
    g->add_option("--variant", gadget.variant, "comm-a, comm-b, comm-c, comm-d or sform");
    g->add_option("--seed", gadget.seed, "Seed");
    add_output(g, gadget.output);

    BenchOptions bench;
    auto *b = app.add_subcommand("bench", "Time phase_transform over N = 2^1..2^max-n, M = 2^1..2^max-m");
    b->add_option("--max-n", bench.max_n, "Largest log2 N");
    b->add_option("--max-m", bench.max_m, "Largest log2 M");
    b->add_option("--reps", bench.reps, "Repetitions; the minimum wall time is reported");
    b->add_option("--seed", bench.seed, "Seed");
    b->add_option("--budget", bench.budget, "Amplitude budget (default PHASEKIT_MEM_BUDGET or 2^24)");
    add_output(b, bench.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (v->parsed()) {
            return cmd_verify(verify, out, err);
        }
        if (d->parsed()) {
            return cmd_demo(demo, out, err);
        }
        if (g->parsed()) {
            return cmd_gadget(gadget, out, err);
        }
        return cmd_bench(bench, out, err);
    } catch (const ParseError &e) {
        err << "phasekit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError &e) {
        err << "phasekit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "phasekit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "phasekit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "phasekit: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace phasekit::harness
