#include "oneform/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "oneform/chain1d.hpp"
#include "oneform/decode.hpp"
#include "oneform/parallel.hpp"
#include "oneform/planar.hpp"
#include "oneform/qstate.hpp"
#include "oneform/rbim.hpp"
#include "oneform/rg2d.hpp"
#include "oneform/rng.hpp"
#include "oneform/runio.hpp"
#include "oneform/stats.hpp"
#include "oneform/strings.hpp"

namespace oneform {

using nlohmann::json;

std::vector<double> ExperimentConfig::grid_values() const {
    if (!grid_set) return {};
    if (grid_step <= 0 || grid_stop < grid_start)
        throw std::invalid_argument("grid must be start:stop:step with step > 0");
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double v = grid_start + i * grid_step;
        if (v > grid_stop + 1e-12) break;
        out.push_back(v);
    }
    return out;
}

std::string ExperimentConfig::echo() const {
    std::ostringstream os;
    os << "experiment=" << experiment;
    if (!sizes.empty()) {
        os << " L=";
        for (size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
    }
    if (grid_set)
        os << " grid=" << fmt_num(grid_start) << ":" << fmt_num(grid_stop) << ":"
           << fmt_num(grid_step);
    os << " decoder=" << decoder << " samples=" << samples;
    if (lx > 0) os << " lx=" << lx << " ly=" << ly;
    if (theta >= 0) os << " theta=" << fmt_num(theta);
    if (gx >= 0) os << " gx=" << fmt_num(gx) << " gz=" << fmt_num(gz);
    if (hx >= 0) os << " hx=" << fmt_num(hx) << " hz=" << fmt_num(hz);
    if (lsub > 0) os << " lsub=" << lsub;
    if (xc_set) os << " xc=" << fmt_num(xc) << " nu=" << fmt_num(nu);
    if (!in_path.empty()) os << " in=" << in_path;
    return os.str();
}

namespace {

struct WorkerCtx {
    BlossomMatcher matcher;
};

// per-sample (w_x + w_y)/2 under a named decoder
double wz_sample(const Lattice& lat, double p, const std::string& decoder, uint64_t seed,
                 int index, BlossomMatcher& matcher) {
    Rng rng(seed, 0, index);
    ErrorSample s = sample_errors(lat, p, rng);
    if (decoder == "mwpm") {
        DecodeResult r = mwpm_decode(lat, s.syndrome, matcher);
        auto [wx, wy] = evaluate_decode(s, r, lat);
        return 0.5 * (wx + wy);
    }
    if (decoder == "ml") {
        const HomologyClass q = ml_decode(lat, s.syndrome, p);
        // the ML route predicts the class directly; score both loops
        const int wx = q.qx == s.cls.qx ? 1 : -1;
        const int wy = q.qy == s.cls.qy ? 1 : -1;
        return 0.5 * (wx + wy);
    }
    throw std::invalid_argument("unknown decoder: " + decoder);
}

} // namespace

std::vector<WzPoint> wz_scan(const std::vector<int>& sizes, const std::vector<double>& grid,
                             const std::string& decoder, int samples, uint64_t seed) {
    if (decoder != "mwpm" && decoder != "ml")
        throw std::invalid_argument("unknown decoder: " + decoder);
    std::vector<WzPoint> out;
    const int workers = worker_count();
    for (int L : sizes) {
        const Lattice lat = Lattice::torus(L, L);
        for (size_t gi = 0; gi < grid.size(); ++gi) {
            const double p = grid[gi];
            // decorrelate points: one seed stream per (L, p) cell
            const uint64_t cell_seed = mix64(seed ^ mix64(L * 1000003u + gi));
            std::vector<double> w(samples);
            parallel_samples<WorkerCtx>(samples, workers, [&](WorkerCtx& ctx, int i) {
                w[i] = wz_sample(lat, p, decoder, cell_seed, i, ctx.matcher);
            });
            const MeanErr me = mean_stderr(w);
            out.push_back({L, p, me.mean, me.stderr_, samples});
        }
    }
    return out;
}

std::vector<Curve> wz_curves(const std::vector<WzPoint>& pts) {
    std::vector<Curve> curves;
    for (const auto& pt : pts) {
        Curve* c = nullptr;
        for (auto& e : curves)
            if (e.label == pt.L) c = &e;
        if (!c) {
            curves.push_back(Curve{});
            curves.back().label = pt.L;
            c = &curves.back();
        }
        c->x.push_back(pt.p);
        c->y.push_back(pt.mean);
        c->yerr.push_back(pt.stderr_);
    }
    return curves;
}

std::vector<RgPoint> rg_disorder_scan(const std::vector<int>& sizes,
                                      const std::vector<double>& thetas, int samples,
                                      uint64_t seed) {
    std::vector<RgPoint> out;
    const int workers = worker_count();
    for (int L : sizes) {
        const Lattice lat = Lattice::torus(L, L);
        const int max_rg = static_cast<int>(std::round(std::log2(L))) - 1;
        for (size_t gi = 0; gi < thetas.size(); ++gi) {
            const double theta = thetas[gi];
            const double p = std::pow(std::sin(theta / 2), 2);
            const uint64_t cell_seed = mix64(seed ^ mix64(L * 2000003u + gi));
            // probe value per sample and RG depth
            std::vector<std::vector<double>> probes(max_rg + 1,
                                                    std::vector<double>(samples));
            parallel_samples<WorkerCtx>(samples, workers, [&](WorkerCtx& ctx, int i) {
                Rng rng(cell_seed, 0, i);
                ErrorSample s = sample_errors(lat, p, rng);
                DecodeResult r = mwpm_decode(lat, s.syndrome, ctx.matcher);
                BitGrid g = BitGrid::from_chain(lat, s.errors ^ r.recovery);
                for (int n_rg = 0; n_rg <= max_rg; ++n_rg) {
                    probes[n_rg][i] = g.east[0] ? -1.0 : 1.0;
                    if (n_rg < max_rg) g = rg_step(g);
                }
            });
            for (int n_rg = 0; n_rg <= max_rg; ++n_rg) {
                const MeanErr me = mean_stderr(probes[n_rg]);
                out.push_back({L, theta, n_rg, me.mean, me.stderr_, samples});
            }
        }
    }
    return out;
}

std::vector<PlanarPoint> planar_scan(const std::vector<int>& a_sizes,
                                     const std::vector<double>& grid, int samples,
                                     uint64_t seed) {
    std::vector<PlanarPoint> out;
    const int workers = worker_count();
    for (int A : a_sizes) {
        if (A % 2 != 0) throw std::invalid_argument("subsystem size must be even");
        const Lattice lat = Lattice::cylinder(2 * A, A);
        const RegionSpec region{A / 2, 0, A, A};
        for (size_t gi = 0; gi < grid.size(); ++gi) {
            const double p = grid[gi];
            const uint64_t cell_seed = mix64(seed ^ mix64(A * 3000017u + gi));
            std::vector<double> w(samples);
            parallel_samples<WorkerCtx>(samples, workers, [&](WorkerCtx& ctx, int i) {
                Rng rng(cell_seed, 0, i);
                ErrorSample s = sample_errors(lat, p, rng);
                w[i] = folded_sample(lat, s, region, ctx.matcher).score;
            });
            const MeanErr me = mean_stderr(w);
            out.push_back({A, 2 * A, A, p, me.mean, me.stderr_, samples});
        }
    }
    return out;
}

std::vector<LocalPoint> local_scan(int L, const std::vector<double>& grid, int samples,
                                   uint64_t seed) {
    std::vector<LocalPoint> out;
    const int workers = worker_count();
    const Lattice lat = Lattice::torus(L, L);
    const int rounds = static_cast<int>(std::round(std::log2(L))) - 1;  // stop at 2x2
    for (size_t gi = 0; gi < grid.size(); ++gi) {
        const double p = grid[gi];
        const uint64_t cell_seed = mix64(seed ^ mix64(L * 4000037u + gi));
        std::vector<double> cleared(samples), density(samples);
        parallel_samples<WorkerCtx>(samples, workers, [&](WorkerCtx&, int i) {
            Rng rng(cell_seed, 0, i);
            ErrorSample s = sample_errors(lat, p, rng);
            LocalDecodeResult r = local_decode(lat, s.syndrome, rounds);
            cleared[i] = r.cleared ? 1.0 : 0.0;
            density[i] = r.density.empty() ? 0.0 : r.density.back();
        });
        const MeanErr mc = mean_stderr(cleared);
        const MeanErr md = mean_stderr(density);
        out.push_back({L, p, mc.mean, mc.stderr_, md.mean, samples});
    }
    return out;
}

std::optional<double> local_threshold(const std::vector<LocalPoint>& pts) {
    for (size_t i = 1; i < pts.size(); ++i) {
        const double a = pts[i - 1].clear_fraction, b = pts[i].clear_fraction;
        if (a >= 0.5 && b < 0.5) {
            const double t = (a - 0.5) / (a - b);
            return pts[i - 1].p + t * (pts[i].p - pts[i - 1].p);
        }
    }
    return std::nullopt;
}

namespace {

struct OutputBundle {
    std::string csv;
    json summary;
};

OutputBundle run_wz(const ExperimentConfig& cfg) {
    if (cfg.sizes.empty()) throw std::invalid_argument("wz-scan needs --L");
    const auto grid = cfg.grid_values();
    if (grid.empty()) throw std::invalid_argument("wz-scan needs --grid");
    const auto pts = wz_scan(cfg.sizes, grid, cfg.decoder, cfg.samples, cfg.seed);

    std::ostringstream csv;
    csv << "L,p,mean_wz,stderr,n_samples\n";
    for (const auto& pt : pts)
        csv << pt.L << "," << fmt_num(pt.p) << "," << fmt_num(pt.mean) << ","
            << fmt_num(pt.stderr_) << "," << pt.n << "\n";

    OutputBundle out;
    out.csv = csv.str();
    out.summary["points"] = pts.size();
    if (cfg.sizes.size() >= 2) {
        const CrossingEstimate est = crossing_estimate(wz_curves(pts));
        out.summary["crossing"] = {{"found", est.found},
                                   {"x_c", est.x_c},
                                   {"err", est.err},
                                   {"half_spread", est.half_spread},
                                   {"bootstrap_err", est.bootstrap_err}};
    }
    return out;
}

OutputBundle run_kappa(const ExperimentConfig& cfg) {
    const int lx = cfg.lx > 0 ? cfg.lx : 2;
    const int ly = cfg.ly > 0 ? cfg.ly : 2;
    const Lattice lat = Lattice::torus(lx, ly);
    Statevector psi;
    if (cfg.gx >= 0) {
        psi = deformed_tc_state(lat, cfg.gx, cfg.gz);
    } else {
        const double theta = cfg.theta >= 0 ? cfg.theta : 0.0;
        psi = product_state(lat, theta);
    }
    const KappaTable table = kappa_exact(psi, lat);

    std::ostringstream csv;
    csv << "m_mask,q_x,q_y,kappa\n";
    for (uint32_t m = 0; m < table.k.size(); ++m) {
        if (__builtin_popcount(m) & 1) continue;
        for (int q = 0; q < 4; ++q) {
            const HomologyClass h = HomologyClass::from_index(q);
            csv << m << "," << h.qx << "," << h.qy << "," << fmt_num(table.k[m][q]) << "\n";
        }
    }
    OutputBundle out;
    out.csv = csv.str();
    out.summary["sum_max_kappa"] = sum_max_kappa(table);
    out.summary["total"] = table.total();
    return out;
}

OutputBundle run_rbim_check(const ExperimentConfig& cfg) {
    const int lx = cfg.lx > 0 ? cfg.lx : 2;
    const int ly = cfg.ly > 0 ? cfg.ly : 2;
    const Lattice lat = Lattice::torus(lx, ly);
    std::vector<double> gxs = cfg.grid_values();
    if (gxs.empty()) {
        if (cfg.gx <= 0) throw std::invalid_argument("rbim-check needs --grid or --gx");
        gxs = {cfg.gx};
    }

    std::ostringstream csv;
    csv << "g_x,identity,lhs_log,rhs_log,rel_err\n";
    OutputBundle out;
    double worst = 0;
    json reports = json::array();
    for (double g : gxs) {
        const IdentityReport rep = ising_twist_identities(lat, g);
        for (const auto& c : rep.checks) {
            csv << fmt_num(g) << "," << c.name << "," << fmt_num(c.lhs_log) << ","
                << fmt_num(c.rhs_log) << "," << fmt_num(c.rel_err) << "\n";
            reports.push_back({{"lattice", lat.header()},
                               {"g_x", g},
                               {"identity", c.name},
                               {"lhs_log", c.lhs_log},
                               {"rhs_log", c.rhs_log},
                               {"rel_err", c.rel_err}});
        }
        worst = std::max(worst, rep.max_rel_err);
    }
    out.csv = csv.str();
    out.summary["checks"] = reports;
    out.summary["max_rel_err"] = worst;
    return out;
}

OutputBundle run_rg_disorder(const ExperimentConfig& cfg) {
    if (cfg.sizes.empty()) throw std::invalid_argument("rg-disorder needs --L");
    const auto thetas = cfg.grid_values();
    if (thetas.empty()) throw std::invalid_argument("rg-disorder needs --grid (theta)");
    const auto pts = rg_disorder_scan(cfg.sizes, thetas, cfg.samples, cfg.seed);

    std::ostringstream csv;
    csv << "theta,L,n_rg,mean,stderr,n_samples\n";
    for (const auto& pt : pts)
        csv << fmt_num(pt.theta) << "," << pt.L << "," << pt.n_rg << ","
            << fmt_num(pt.mean) << "," << fmt_num(pt.stderr_) << "," << pt.n << "\n";

    OutputBundle out;
    out.csv = csv.str();
    // crossing of the deepest-RG curves across sizes
    std::vector<Curve> curves;
    for (int L : cfg.sizes) {
        const int max_rg = static_cast<int>(std::round(std::log2(L))) - 1;
        Curve c;
        c.label = L;
        for (const auto& pt : pts)
            if (pt.L == L && pt.n_rg == max_rg) {
                c.x.push_back(pt.theta);
                c.y.push_back(pt.mean);
                c.yerr.push_back(pt.stderr_);
            }
        if (c.x.size() >= 2) curves.push_back(c);
    }
    if (curves.size() >= 2) {
        const CrossingEstimate est = crossing_estimate(curves);
        out.summary["crossing"] = {{"found", est.found}, {"x_c", est.x_c}, {"err", est.err}};
    }
    return out;
}

OutputBundle run_planar(const ExperimentConfig& cfg) {
    if (cfg.sizes.empty()) throw std::invalid_argument("planar-scan needs --L (subsystem sizes)");
    const auto grid = cfg.grid_values();
    if (grid.empty()) throw std::invalid_argument("planar-scan needs --grid");
    const auto pts = planar_scan(cfg.sizes, grid, cfg.samples, cfg.seed);

    std::ostringstream csv;
    csv << "p,A,system_w,system_h,mean,stderr,n_samples\n";
    for (const auto& pt : pts)
        csv << fmt_num(pt.p) << "," << pt.A << "," << pt.sys_w << "," << pt.sys_h << ","
            << fmt_num(pt.mean) << "," << fmt_num(pt.stderr_) << "," << pt.n << "\n";

    OutputBundle out;
    out.csv = csv.str();
    if (cfg.sizes.size() >= 2) {
        std::vector<Curve> curves;
        for (int A : cfg.sizes) {
            Curve c;
            c.label = A;
            for (const auto& pt : pts)
                if (pt.A == A) {
                    c.x.push_back(pt.p);
                    c.y.push_back(pt.mean);
                    c.yerr.push_back(pt.stderr_);
                }
            curves.push_back(c);
        }
        const CrossingEstimate est = crossing_estimate(curves);
        out.summary["crossing"] = {{"found", est.found}, {"x_c", est.x_c}, {"err", est.err}};
    }
    return out;
}

OutputBundle run_local(const ExperimentConfig& cfg) {
    const int L = cfg.sizes.empty() ? 32 : cfg.sizes[0];
    const auto grid = cfg.grid_values();
    if (grid.empty()) throw std::invalid_argument("local-scan needs --grid");
    const auto pts = local_scan(L, grid, cfg.samples, cfg.seed);

    std::ostringstream csv;
    csv << "p,L,clear_fraction,clear_stderr,final_density,n_samples\n";
    for (const auto& pt : pts)
        csv << fmt_num(pt.p) << "," << pt.L << "," << fmt_num(pt.clear_fraction) << ","
            << fmt_num(pt.clear_err) << "," << fmt_num(pt.final_density) << "," << pt.n << "\n";

    OutputBundle out;
    out.csv = csv.str();
    const auto th = local_threshold(pts);
    out.summary["threshold"] = {{"found", th.has_value()}, {"p_c", th.value_or(0.0)}};
    return out;
}

OutputBundle run_chain_ising(const ExperimentConfig& cfg) {
    if (cfg.sizes.empty()) throw std::invalid_argument("chain-ising needs --L");
    std::vector<double> hxs = cfg.grid_values();
    if (hxs.empty()) {
        if (cfg.hx < 0) throw std::invalid_argument("chain-ising needs --grid or --hx");
        hxs = {cfg.hx};
    }
    std::ostringstream csv;
    csv << "model,h_x,h_z,L,indicator,stderr,n_samples\n";
    for (int L : cfg.sizes)
        for (size_t gi = 0; gi < hxs.size(); ++gi) {
            const ChainState st = ising_ground_state(L, hxs[gi], cfg.hz);
            const uint64_t cell_seed = mix64(cfg.seed ^ mix64(L * 5000011u + gi));
            const IndicatorPoint pt = majority_indicator(st, cfg.samples, cell_seed);
            csv << "ising," << fmt_num(hxs[gi]) << "," << fmt_num(cfg.hz) << "," << L << ","
                << fmt_num(pt.mean) << "," << fmt_num(pt.stderr_) << "," << pt.n_samples
                << "\n";
        }
    OutputBundle out;
    out.csv = csv.str();
    return out;
}

OutputBundle run_chain_spt(const ExperimentConfig& cfg) {
    if (cfg.sizes.empty()) throw std::invalid_argument("chain-spt needs --L (total size)");
    std::vector<double> deltas = cfg.grid_values();
    if (deltas.empty()) throw std::invalid_argument("chain-spt needs --grid (delta)");
    std::ostringstream csv;
    csv << "model,delta,L_total,L_sub,indicator,stderr,n_samples\n";
    for (int L : cfg.sizes) {
        const int lsub = cfg.lsub > 0 ? cfg.lsub : L / 2;
        for (size_t gi = 0; gi < deltas.size(); ++gi) {
            const uint64_t cell_seed = mix64(cfg.seed ^ mix64(L * 6000023u + gi));
            const IndicatorPoint pt =
                spt_subsystem_indicator(deltas[gi], L, lsub, cfg.samples, cell_seed);
            csv << "cluster," << fmt_num(deltas[gi]) << "," << L << "," << lsub << ","
                << fmt_num(pt.mean) << "," << fmt_num(pt.stderr_) << "," << pt.n_samples
                << "\n";
        }
    }
    OutputBundle out;
    out.csv = csv.str();
    return out;
}

OutputBundle run_criterion(const ExperimentConfig& cfg) {
    if (cfg.sizes.empty()) throw std::invalid_argument("criterion-1d needs --L");
    const auto thetas = cfg.grid_values();
    if (thetas.empty()) throw std::invalid_argument("criterion-1d needs --grid (theta)");
    std::ostringstream csv;
    csv << "theta,L,value\n";
    for (int L : cfg.sizes)
        for (double t : thetas)
            csv << fmt_num(t) << "," << L << "," << fmt_num(criterion_1d(t, L)) << "\n";
    OutputBundle out;
    out.csv = csv.str();
    return out;
}

OutputBundle run_collapse(const ExperimentConfig& cfg) {
    if (cfg.in_path.empty()) throw std::invalid_argument("collapse needs --in");
    if (!cfg.xc_set) throw std::invalid_argument("collapse needs --xc and --nu");
    const CsvTable table = read_csv(cfg.in_path);
    // accept wz-scan or rg-disorder outputs
    std::string xcol = table.col("p") >= 0 ? "p" : "theta";
    std::string ycol = table.col("mean_wz") >= 0 ? "mean_wz" : "mean";
    std::vector<Curve> curves = curves_from_table(table, "L", xcol, ycol, "stderr");
    if (table.col("n_rg") >= 0) {
        // keep only the deepest RG level per size
        const CsvTable& t = table;
        const int cl = t.col("L"), cr = t.col("n_rg"), cx = t.col(xcol), cy = t.col(ycol);
        const int ce = t.col("stderr");
        std::vector<Curve> deep;
        for (const auto& c : curves) {
            int max_rg = 0;
            for (const auto& row : t.rows)
                if (row[cl] == c.label) max_rg = std::max(max_rg, static_cast<int>(row[cr]));
            Curve d;
            d.label = c.label;
            for (const auto& row : t.rows)
                if (row[cl] == c.label && static_cast<int>(row[cr]) == max_rg) {
                    d.x.push_back(row[cx]);
                    d.y.push_back(row[cy]);
                    d.yerr.push_back(ce >= 0 ? row[ce] : 0.0);
                }
            deep.push_back(d);
        }
        curves = deep;
    }

    const CollapseResult res = data_collapse(curves, cfg.xc, cfg.nu);
    const CrossingEstimate est = crossing_estimate(curves);

    std::ostringstream csv;
    csv << "u,spread\n";
    for (size_t i = 0; i < res.u.size(); ++i)
        csv << fmt_num(res.u[i]) << "," << fmt_num(res.spread[i]) << "\n";

    OutputBundle out;
    out.csv = csv.str();
    out.summary["x_c"] = est.found ? est.x_c : 0.0;
    out.summary["err"] = est.err;
    out.summary["method"] = "pairwise-median crossing + collapse";
    out.summary["inputs"] = cfg.in_path;
    out.summary["collapse_quality"] = res.quality;
    out.summary["nu"] = cfg.nu;
    out.summary["xc_used"] = cfg.xc;
    return out;
}

} // namespace

void run_experiment(const ExperimentConfig& cfg) {
    if (!cfg.seed_set) throw std::invalid_argument("--seed is mandatory");
    if (cfg.out_path.empty()) throw std::invalid_argument("--out is mandatory");
    if (cfg.samples <= 0) throw std::invalid_argument("--samples must be positive");

    OutputBundle bundle;
    std::string lattice_header = "n/a";
    if (cfg.experiment == "wz-scan") {
        bundle = run_wz(cfg);
        lattice_header = "square torus, sizes per row";
    } else if (cfg.experiment == "kappa-exact") {
        bundle = run_kappa(cfg);
        lattice_header = Lattice::torus(cfg.lx > 0 ? cfg.lx : 2, cfg.ly > 0 ? cfg.ly : 2).header();
    } else if (cfg.experiment == "rbim-check") {
        bundle = run_rbim_check(cfg);
        lattice_header = Lattice::torus(cfg.lx > 0 ? cfg.lx : 2, cfg.ly > 0 ? cfg.ly : 2).header();
    } else if (cfg.experiment == "rg-disorder") {
        bundle = run_rg_disorder(cfg);
        lattice_header = "square torus, sizes per row";
    } else if (cfg.experiment == "planar-scan") {
        bundle = run_planar(cfg);
        lattice_header = "cylinder 2AxA, subsystem AxA";
    } else if (cfg.experiment == "local-scan") {
        bundle = run_local(cfg);
        lattice_header = "square torus";
    } else if (cfg.experiment == "chain-ising") {
        bundle = run_chain_ising(cfg);
        lattice_header = "periodic chain";
    } else if (cfg.experiment == "chain-spt") {
        bundle = run_chain_spt(cfg);
        lattice_header = "periodic chain";
    } else if (cfg.experiment == "criterion-1d") {
        bundle = run_criterion(cfg);
        lattice_header = "periodic chain";
    } else if (cfg.experiment == "collapse") {
        bundle = run_collapse(cfg);
        lattice_header = "from input";
    } else {
        throw std::invalid_argument("unknown experiment: " + cfg.experiment);
    }

    const std::string stamp = file_stamp(cfg.echo(), cfg.seed, lattice_header);
    bundle.summary["schema_version"] = kSummarySchemaVersion;
    bundle.summary["tool_version"] = kToolVersion;
    bundle.summary["config"] = cfg.echo();
    bundle.summary["seed"] = cfg.seed;
    bundle.summary["lattice"] = lattice_header;

    const std::string json_path = cfg.out_path + ".summary.json";
    try {
        write_text_file(cfg.out_path, stamp + bundle.csv);
        write_text_file(json_path, bundle.summary.dump(2) + "\n");
    } catch (...) {
        std::remove(cfg.out_path.c_str());
        std::remove(json_path.c_str());
        throw;
    }
}

} // namespace oneform
