#include "srblab/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "srblab/clustering.hpp"
#include "srblab/errors.hpp"
#include "srblab/json_io.hpp"
#include "srblab/kernels/kernels.hpp"
#include "srblab/observable.hpp"
#include "srblab/parallel.hpp"
#include "srblab/version.hpp"

namespace srblab {
namespace {

struct Workspace {
    std::shared_ptr<const MapSystem> system;
    std::shared_ptr<const GridPartition> partition;
    std::shared_ptr<const TestFunctionFamily> family;
    std::shared_ptr<const WeakStarMetric> metric;
};

Workspace build_workspace(const ExperimentConfig& cfg) {
    Workspace ws;
    ws.system = make_system(cfg.system_name, cfg.system_params);
    const int dim = ws.system->domain().dim;
    std::vector<std::uint32_t> res = cfg.resolution;
    if (res.empty()) res = ws.system->default_resolution();
    if (res.size() == 1 && dim > 1) res.assign(dim, res[0]);
    if (static_cast<int>(res.size()) != dim)
        throw ConfigError("resolution needs " + std::to_string(dim) + " entries for system " +
                          cfg.system_name);
    ws.partition = std::make_shared<const GridPartition>(ws.system->domain(), res);
    ws.family = std::make_shared<const TestFunctionFamily>(ws.system->domain(), cfg.truncation);
    ws.metric = std::make_shared<const WeakStarMetric>(ws.partition, ws.family, cfg.truncation);
    return ws;
}

Point point_from(const std::vector<double>& coords, int dim, const char* field) {
    if (static_cast<int>(coords.size()) != dim)
        throw ConfigError(std::string(field) + " needs " + std::to_string(dim) + " coordinates");
    Point p{};
    for (int k = 0; k < dim; ++k) p[k] = coords[k];
    return p;
}

PomegaParams pomega_params(const ExperimentConfig& cfg) {
    PomegaParams p;
    p.tail_fraction = cfg.tail_fraction;
    p.delta_cluster = cfg.delta_cluster;
    p.delta_conv = cfg.delta_conv;
    p.burn_in = cfg.burn_in;
    return p;
}

ObservableParams observable_params(const ExperimentConfig& cfg) {
    ObservableParams p{CheckpointSchedule::geometric(cfg.n0, cfg.gamma, cfg.horizon),
                       pomega_params(cfg)};
    p.epsilon_ladder = cfg.epsilon_ladder;
    p.phi_srb = cfg.phi_srb;
    p.threads = cfg.threads;
    return p;
}

// Experiment-defining fields only: execution knobs (threads, output paths)
// stay out so reports are byte-identical across machines and worker counts.
void write_config_echo(JsonWriter& w, const ExperimentConfig& cfg) {
    w.begin_object();
    w.key("system");
    w.begin_object();
    w.key("name");
    w.value(cfg.system_name);
    for (const auto& [k, v] : cfg.system_params) {
        w.key(k);
        w.value(v);
    }
    w.end_object();
    w.key("grid");
    w.begin_array();
    for (auto r : cfg.resolution) w.value(static_cast<std::uint64_t>(r));
    w.end_array();
    w.key("truncation");
    w.value(static_cast<std::uint64_t>(cfg.truncation));
    w.key("schedule");
    w.begin_object();
    w.key("n0");
    w.value(cfg.n0);
    w.key("gamma");
    w.value(cfg.gamma);
    w.key("horizon");
    w.value(cfg.horizon);
    w.key("burn_in");
    w.value(cfg.burn_in);
    w.end_object();
    w.key("pomega");
    w.begin_object();
    w.key("delta_cluster");
    w.value(cfg.delta_cluster);
    w.key("delta_conv");
    w.value(cfg.delta_conv);
    w.key("tail_fraction");
    w.value(cfg.tail_fraction);
    w.end_object();
    w.key("observable");
    w.begin_object();
    w.key("samples");
    w.value(static_cast<std::uint64_t>(cfg.samples));
    w.key("seed");
    w.value(cfg.seed);
    w.key("epsilon_ladder");
    w.begin_array();
    for (double e : cfg.epsilon_ladder) w.value(e);
    w.end_array();
    w.key("phi_srb");
    w.value(cfg.phi_srb);
    w.key("holdout_samples");
    w.value(static_cast<std::uint64_t>(cfg.holdout_samples));
    w.key("holdout_seed");
    w.value(cfg.resolved_holdout_seed());
    w.key("holdout_epsilon");
    w.value(cfg.holdout_epsilon);
    w.key("sweep");
    w.begin_array();
    for (auto s : cfg.sweep) w.value(static_cast<std::uint64_t>(s));
    w.end_array();
    w.end_object();
    w.end_object();
}

void write_system_block(JsonWriter& w, const MapSystem& sys) {
    w.begin_object();
    w.key("name");
    w.value(sys.name());
    w.key("formula");
    w.value(sys.formula());
    w.key("params");
    w.begin_object();
    for (const auto& [k, v] : sys.params()) {
        w.key(k);
        w.value(v);
    }
    w.end_object();
    w.key("metadata");
    w.begin_object();
    for (const auto& [k, v] : sys.metadata()) {
        w.key(k);
        w.value(v);
    }
    w.end_object();
    w.end_object();
}

void write_preamble(JsonWriter& w, const ExperimentConfig& cfg, const MapSystem& sys) {
    w.key("schema");
    w.value(kReportSchema);
    w.key("tool");
    w.begin_object();
    w.key("name");
    w.value(kToolName);
    w.key("version");
    w.value(kToolVersion);
    w.end_object();
    w.key("system");
    write_system_block(w, sys);
    w.key("config");
    write_config_echo(w, cfg);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

std::string config_echo_line(const ExperimentConfig& cfg) {
    JsonWriter w;
    write_config_echo(w, cfg);
    return w.take();
}

Point default_x0(const ExperimentConfig& cfg, const MapSystem& sys) {
    if (cfg.x0) return point_from(*cfg.x0, sys.domain().dim, "x0");
    return lebesgue_point(sys.domain(), cfg.seed, 0);
}

ExperimentConfig with_samples(const ExperimentConfig& cfg, std::size_t n) {
    ExperimentConfig c = cfg;
    c.samples = n;
    return c;
}

ObservableSetEstimate run_estimate(const ExperimentConfig& cfg, const Workspace& ws) {
    const SamplePlan plan{cfg.samples, cfg.seed, ws.system->domain()};
    return estimate_observable_set(*ws.system, plan, *ws.metric, observable_params(cfg));
}

}  // namespace

std::string resolve_out_dir(const ExperimentConfig& cfg, const std::string& flag_out) {
    if (!flag_out.empty()) return flag_out;
    if (!cfg.out_dir.empty()) return cfg.out_dir;
    if (const char* env = std::getenv("SRBLAB_OUT")) {
        if (*env) return env;
    }
    return "out";
}

int run_list_systems(std::ostream& os) {
    for (const auto& name : registered_systems()) {
        const auto sys = make_system(name);
        os << name << "\n  domain: ";
        const auto& dom = sys->domain();
        for (int k = 0; k < dom.dim; ++k) {
            os << (k ? " x " : "") << (dom.periodic[k] ? "S[" : "[") << dom.lo[k] << ", "
               << dom.hi[k] << (dom.periodic[k] ? ")" : "]");
        }
        os << "\n  formula: " << sys->formula() << "\n";
        if (!sys->params().empty()) {
            os << "  params:";
            for (const auto& [k, v] : sys->params()) os << " " << k << "=" << v;
            os << "\n";
        }
        if (!sys->metadata().empty()) {
            os << "  metadata:";
            for (const auto& [k, v] : sys->metadata()) os << " " << k << "=" << v;
            os << "\n";
        }
    }
    return kExitOk;
}

int run_empiric(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& log) {
    const auto t0 = std::chrono::steady_clock::now();
    const Workspace ws = build_workspace(cfg);
    const Point x0 = default_x0(cfg, *ws.system);
    const auto schedule = CheckpointSchedule::geometric(cfg.n0, cfg.gamma, cfg.horizon);
    const EmpiricRun run =
        empiric_sequence(*ws.system, x0, schedule, ws.partition, cfg.burn_in);

    std::optional<std::vector<double>> ref_sig;
    if (cfg.reference == "uniform") {
        ref_sig = ws.metric->signature(uniform_measure(ws.partition));
    } else if (cfg.reference == "first" && !run.snapshots.empty()) {
        ref_sig = ws.metric->signature(run.snapshots.front().measure);
    }

    std::string csv;
    csv += "# ";
    csv += kToolName;
    csv += " ";
    csv += kToolVersion;
    csv += "\n# config: " + config_echo_line(cfg) + "\n";
    csv += "n,dist_to_reference,occupied_cells\n";
    for (const auto& snap : run.snapshots) {
        csv += std::to_string(snap.n) + ",";
        if (ref_sig) csv += format_double(ws.metric->distance(ws.metric->signature(snap.measure),
                                                              *ref_sig));
        csv += "," + std::to_string(snap.measure.support_size()) + "\n";
    }
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/sequence.csv", csv);

    if (cfg.dump_measures) {
        std::filesystem::create_directories(out_dir + "/measures");
        for (const auto& snap : run.snapshots) {
            write_file(out_dir + "/measures/empiric_" + std::to_string(snap.n) + ".json",
                       measure_to_json(snap.measure) + "\n");
        }
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log << "empiric: " << run.snapshots.size() << " checkpoints";
    if (run.diverged_at) log << " (orbit diverged at step " << *run.diverged_at << ")";
    log << ", " << secs << " s -> " << out_dir << "/sequence.csv\n";
    return run.diverged_at ? kExitRuntime : kExitOk;
}

int run_pomega(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& log) {
    const auto t0 = std::chrono::steady_clock::now();
    const Workspace ws = build_workspace(cfg);
    const Point x0 = default_x0(cfg, *ws.system);
    const auto schedule = CheckpointSchedule::geometric(cfg.n0, cfg.gamma, cfg.horizon);
    const PomegaResult res =
        estimate_pomega(*ws.system, x0, schedule, *ws.metric, pomega_params(cfg));
    if (res.estimate.diverged_at)
        throw OrbitDivergenceError("orbit diverged", *res.estimate.diverged_at);

    std::vector<SegmentProjection> projections;
    const bool with_segment = cfg.endpoint_a && cfg.endpoint_b;
    if (with_segment) {
        const auto mu_a =
            dirac(point_from(*cfg.endpoint_a, ws.system->domain().dim, "endpoint_a"),
                  ws.partition);
        const auto mu_b =
            dirac(point_from(*cfg.endpoint_b, ws.system->domain().dim, "endpoint_b"),
                  ws.partition);
        projections = segment_projection_residual(res.estimate, mu_a, mu_b, *ws.metric);
    }

    JsonWriter w;
    w.begin_object();
    write_preamble(w, cfg, *ws.system);
    w.key("x0");
    w.begin_array();
    for (int k = 0; k < ws.system->domain().dim; ++k) w.value(x0[k]);
    w.end_array();
    w.key("estimate");
    w.begin_object();
    w.key("convergent");
    w.value(res.estimate.convergent);
    w.key("diameter");
    w.value(res.estimate.diameter);
    w.key("window");
    w.begin_array();
    w.value(res.estimate.window_min);
    w.value(res.estimate.window_max);
    w.end_array();
    w.key("representatives");
    w.begin_array();
    for (std::size_t i = 0; i < res.estimate.representatives.size(); ++i) {
        w.begin_object();
        w.key("population");
        w.value(static_cast<std::uint64_t>(res.estimate.populations[i]));
        if (with_segment) {
            w.key("lambda");
            w.value(projections[i].lambda);
            w.key("residual");
            w.value(projections[i].residual);
        }
        w.key("measure");
        write_measure_json(w, res.estimate.representatives[i]);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    w.end_object();

    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/pomega.json", w.take() + "\n");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log << "pomega: " << res.estimate.representatives.size() << " representative(s), "
        << (res.estimate.convergent ? "convergent" : "oscillating") << ", " << secs << " s -> "
        << out_dir << "/pomega.json\n";
    return kExitOk;
}

std::string observable_report_json(const ExperimentConfig& cfg) {
    const Workspace ws = build_workspace(cfg);
    const ObservableSetEstimate est = run_estimate(cfg, ws);

    double coverage = std::numeric_limits<double>::quiet_NaN();
    if (cfg.holdout_samples > 0) {
        const SamplePlan holdout{cfg.holdout_samples, cfg.resolved_holdout_seed(),
                                 ws.system->domain()};
        coverage = minimality_check(est, *ws.system, holdout, *ws.metric,
                                    observable_params(cfg), cfg.holdout_epsilon);
    }

    std::string cardinality_class = "unknown";
    std::vector<std::size_t> sweep_counts;
    if (cfg.sweep.size() >= 3) {
        std::vector<ObservableSetEstimate> sweep_estimates;
        for (std::size_t n : cfg.sweep) {
            if (n == cfg.samples) {
                sweep_estimates.push_back(est);
            } else {
                sweep_estimates.push_back(run_estimate(with_samples(cfg, n), ws));
            }
        }
        const CardinalityReport rep = cardinality_report(sweep_estimates);
        cardinality_class = rep.cls;
        sweep_counts = rep.candidate_counts;
    }

    JsonWriter w;
    w.begin_object();
    write_preamble(w, cfg, *ws.system);
    w.key("candidates");
    w.begin_array();
    for (const auto& cand : est.candidates) {
        w.begin_object();
        w.key("support_samples");
        w.value(static_cast<std::uint64_t>(cand.support_samples));
        w.key("basin_fractions");
        w.begin_array();
        for (const auto& b : cand.basin) {
            w.begin_object();
            w.key("epsilon");
            w.value(b.epsilon);
            w.key("fraction");
            w.value(b.fraction);
            w.key("ci_halfwidth");
            w.value(b.ci_halfwidth);
            w.end_object();
        }
        w.end_array();
        w.key("convergent_fractions");
        w.begin_array();
        for (double f : cand.convergent_fractions) w.value(f);
        w.end_array();
        w.key("decay_ratio_avg");
        w.value(cand.decay_ratio_avg);
        w.key("srb");
        w.value(cand.srb);
        w.key("isolated");
        w.value(cand.isolated);
        w.key("measure");
        write_measure_json(w, cand.representative);
        w.end_object();
    }
    w.end_array();
    w.key("coverage");
    if (std::isnan(coverage)) {
        w.null();
    } else {
        w.value(coverage);
    }
    w.key("holdout_epsilon");
    w.value(cfg.holdout_epsilon);
    w.key("cardinality_class");
    w.value(cardinality_class);
    w.key("cardinality_counts");
    w.begin_array();
    for (auto c : sweep_counts) w.value(static_cast<std::uint64_t>(c));
    w.end_array();
    w.key("excluded_samples");
    w.value(static_cast<std::uint64_t>(est.excluded_samples));
    w.end_object();
    std::string json = w.take();
    json += "\n";
    return json;
}

int run_observable(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& log) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string report = observable_report_json(cfg);
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/report.json", report);

    if (cfg.dump_measures) {
        const Workspace ws = build_workspace(cfg);
        const ObservableSetEstimate est = run_estimate(cfg, ws);
        std::filesystem::create_directories(out_dir + "/measures");
        for (std::size_t i = 0; i < est.candidates.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof(name), "candidate_%03zu.json", i);
            write_file(out_dir + "/measures/" + name,
                       measure_to_json(est.candidates[i].representative) + "\n");
        }
    }

    // Timing and host execution details live outside report.json so reports
    // stay byte-identical across reruns and worker counts.
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    JsonWriter info;
    info.begin_object();
    info.key("wall_time_seconds");
    info.value(secs);
    info.key("kernel");
    info.value(kernels::active().name);
    info.key("threads");
    info.value(static_cast<std::uint64_t>(resolve_threads(cfg.threads)));
    info.end_object();
    write_file(out_dir + "/run_info.json", info.take() + "\n");

    log << "observable: report -> " << out_dir << "/report.json (" << secs << " s)\n";
    return kExitOk;
}

int run_check(std::ostream& os) {
    std::size_t failures = 0;
    auto check = [&](const char* name, bool ok) {
        os << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        failures += !ok;
    };

    // kernel equivalence: scalar vs runtime-selected set, bit level
    {
        std::mt19937_64 gen(7);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const std::size_t n = 37;
        std::vector<double> a(n), b(n), w(n), d1(n, 0.0), d2(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = u(gen);
            b[i] = u(gen);
            w[i] = std::ldexp(1.0, -static_cast<int>(i + 1));
        }
        const auto& sc = kernels::scalar_ops();
        const auto& ac = kernels::active();
        sc.accumulate_scaled(d1.data(), a.data(), 0.77, n);
        ac.accumulate_scaled(d2.data(), a.data(), 0.77, n);
        bool ok = d1 == d2;
        ok = ok && sc.weighted_l1(a.data(), b.data(), w.data(), n) ==
                       ac.weighted_l1(a.data(), b.data(), w.data(), n);
        double xs1[3] = {0.1, -0.4, 0.9}, ys1[3] = {0.2, 0.1, -0.3};
        double xs2[3] = {0.1, -0.4, 0.9}, ys2[3] = {0.2, 0.1, -0.3};
        const kernels::EyeParams eye{0.7, 2.0, 0.5, 0.003, 8.0};
        sc.eye_rk4(xs1, ys1, 3, 500, 2.5e-3, eye, -2.0, 2.0);
        ac.eye_rk4(xs2, ys2, 3, 500, 2.5e-3, eye, -2.0, 2.0);
        for (int l = 0; l < 3; ++l) ok = ok && xs1[l] == xs2[l] && ys1[l] == ys2[l];
        check("kernel equivalence (scalar vs selected)", ok);
    }

    // metric axioms on random measures
    {
        auto part = std::make_shared<const GridPartition>(
            DomainDescriptor::unit_torus(2), std::vector<std::uint32_t>{16, 16});
        auto family = std::make_shared<const TestFunctionFamily>(part->domain, 16);
        WeakStarMetric metric(part, family, 16);
        std::mt19937_64 gen(11);
        std::uniform_int_distribution<std::uint64_t> cell(0, part->cell_count() - 1);
        std::uniform_real_distribution<double> u(0.01, 1.0);
        auto random_measure = [&]() {
            std::map<std::uint64_t, double> m;
            for (int i = 0; i < 12; ++i) m[cell(gen)] += u(gen);
            double s = 0.0;
            for (auto& [c, wgt] : m) s += wgt;
            std::vector<DiscreteMeasure::Entry> cells;
            for (auto& [c, wgt] : m) cells.emplace_back(c, wgt / s);
            return DiscreteMeasure(part, cells);
        };
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            const auto mu = random_measure(), nu = random_measure(), rho = random_measure();
            const auto smu = metric.signature(mu), snu = metric.signature(nu),
                       srho = metric.signature(rho);
            ok = ok && metric.distance(smu, smu) == 0.0;
            ok = ok && metric.distance(smu, snu) == metric.distance(snu, smu);
            ok = ok && metric.distance(smu, snu) <=
                           metric.distance(smu, srho) + metric.distance(srho, snu) + 1e-12;
            const auto mix = convex_combination({mu, nu}, {0.5, 0.5});
            const double lhs = metric.distance(metric.signature(mix), smu);
            ok = ok && std::fabs(lhs - 0.5 * metric.distance(snu, smu)) <= 1e-12;
        }
        check("metric axioms + segment linearity (100 random triples)", ok);
    }

    // oscillation bound along a tripling orbit
    {
        auto part = std::make_shared<const GridPartition>(DomainDescriptor::unit_torus(1),
                                                          std::vector<std::uint32_t>{64});
        auto family = std::make_shared<const TestFunctionFamily>(part->domain, 16);
        WeakStarMetric metric(part, family, 16);
        const auto sys = make_system("tripling");
        EmpiricAccumulator acc(part);
        Point p = make_point(0.2345678);
        bool ok = true;
        std::vector<std::uint64_t> checks{10, 100, 1000, 1999};
        std::size_t ci = 0;
        for (std::uint64_t n = 1; n <= 2000 && ci < checks.size(); ++n) {
            acc.push(p);
            if (n == checks[ci]) {
                const auto before = metric.signature(acc.snapshot());
                EmpiricAccumulator next = acc;
                next.push(sys->step(p));
                const double d = metric.distance(before, metric.signature(next.snapshot()));
                ok = ok && d <= 1.0 / static_cast<double>(n + 1);
                ++ci;
            }
            p = sys->step(p);
        }
        check("oscillation bound dist(mu_n, mu_{n+1}) <= 1/(n+1)", ok);
    }

    // domain closure under iteration
    {
        bool ok = true;
        for (const char* name : {"tripling", "cat", "skew_cat", "contraction_half"}) {
            const auto sys = make_system(name);
            for (std::uint64_t s = 0; s < 2000 && ok; ++s) {
                const Point x0 = lebesgue_point(sys->domain(), 99, s);
                try {
                    iterate(*sys, x0, 200,
                            [&](std::uint64_t, const Point& q) {
                                ok = ok && sys->domain().contains(q);
                            });
                } catch (const std::exception&) {
                    ok = false;
                }
            }
        }
        check("domain closure (random starts stay in-domain)", ok);
    }

    // eye saddles are fixed points of the time map
    {
        const auto sys = make_system("bowen_eye");
        bool ok = true;
        for (double sx : {-1.0, 1.0}) {
            const Point q = sys->step(make_point(sx, 0.0));
            ok = ok && std::fabs(q[0] - sx) <= 1e-8 && std::fabs(q[1]) <= 1e-8;
        }
        check("eye saddles fixed under the time map", ok);
    }

    // dirac wrap + mass conservation under combination/marginal
    {
        auto part = std::make_shared<const GridPartition>(DomainDescriptor::unit_torus(1),
                                                          std::vector<std::uint32_t>{4});
        bool ok = dirac(make_point(1.0), part).cells().front().first == 0;
        auto part2 = std::make_shared<const GridPartition>(
            DomainDescriptor::unit_torus(2), std::vector<std::uint32_t>{8, 8});
        const auto mu = dirac(make_point(0.1, 0.7), part2);
        const auto nu = uniform_measure(part2);
        const auto mix = convex_combination({mu, nu}, {0.25, 0.75});
        ok = ok && std::fabs(mix.weight_sum() - 1.0) <= 1e-9;
        ok = ok && std::fabs(marginal(mix, {0}).weight_sum() - 1.0) <= 1e-9;
        check("dirac wrap + mass conservation", ok);
    }

    os << (failures ? "check: FAILED\n" : "check: all invariants hold\n");
    return failures ? kExitCheckFailed : kExitOk;
}

}  // namespace srblab
