#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>

#include "csv.hpp"

namespace d2d {

namespace {

struct Stats {
    double mean = 0.0, sd = 0.0, se = 0.0;
    std::size_t n = 0;
};

Stats stats_of(const std::vector<double>& xs) {
    Stats st;
    st.n = xs.size();
    if (xs.empty()) return st;
    double sum = 0.0;
    for (double v : xs) sum += v;
    st.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double v : xs) ss += (v - st.mean) * (v - st.mean);
        st.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
        st.se = st.sd / std::sqrt(static_cast<double>(xs.size()));
    }
    return st;
}

std::ofstream open_in_dir(const std::string& dir, const char* name) {
    return open_output((std::filesystem::path(dir) / name).string());
}

struct Shape {
    std::size_t P, S, M, R, E;
};

Shape shape_of(const ExperimentResult& res) {
    Shape sh{res.points.size(), res.cfg.scenarios, res.cfg.methods.size(), res.cfg.runs_per_scenario,
             res.cfg.n_epochs};
    if (res.rows.size() != sh.P * sh.S * sh.M * sh.R)
        throw std::logic_error("experiment rows are not in canonical (point, scenario, method, run) order");
    return sh;
}

const RunRow& row_at(const ExperimentResult& res, const Shape& sh, std::size_t p, std::size_t s, std::size_t m,
                     std::size_t r) {
    return res.rows[((p * sh.S + s) * sh.M + m) * sh.R + r];
}

// Per (point, method) stats over all scenario/run samples.
void aggregate_runs(const ExperimentResult& res, const Shape& sh, std::vector<std::vector<Stats>>& finals,
                    std::vector<std::vector<Stats>>& speeds) {
    finals.assign(sh.P, std::vector<Stats>(sh.M));
    speeds.assign(sh.P, std::vector<Stats>(sh.M));
    for (std::size_t p = 0; p < sh.P; ++p) {
        for (std::size_t m = 0; m < sh.M; ++m) {
            std::vector<double> f, v;
            f.reserve(sh.S * sh.R);
            v.reserve(sh.S * sh.R);
            for (std::size_t s = 0; s < sh.S; ++s) {
                for (std::size_t r = 0; r < sh.R; ++r) {
                    const RunRow& row = row_at(res, sh, p, s, m, r);
                    f.push_back(static_cast<double>(row.final_count));
                    v.push_back(row.mean_speed);
                }
            }
            finals[p][m] = stats_of(f);
            speeds[p][m] = stats_of(v);
        }
    }
}

// Pooled delay mass function per (point, method), normalized per method.
std::map<std::uint32_t, double> delay_mass(const ExperimentResult& res, const Shape& sh, std::size_t p,
                                           std::size_t m) {
    std::map<std::uint32_t, std::uint64_t> counts;
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < sh.S; ++s) {
        for (std::size_t r = 0; r < sh.R; ++r) {
            for (const auto& [delay, c] : row_at(res, sh, p, s, m, r).delay_histogram) {
                counts[delay] += c;
                total += c;
            }
        }
    }
    std::map<std::uint32_t, double> mass;
    if (total == 0) return mass;
    for (const auto& [delay, c] : counts) mass[delay] = static_cast<double>(c) / static_cast<double>(total);
    return mass;
}

void write_histogram_columns(std::ofstream& out, const std::vector<double>& a, const std::vector<double>& b,
                             const char* label_a, const char* label_b) {
    constexpr int bins = 20;
    auto edges = [](const std::vector<double>& xs) {
        double lo = 0.0, hi = 1.0;
        if (!xs.empty()) {
            lo = *std::min_element(xs.begin(), xs.end());
            hi = *std::max_element(xs.begin(), xs.end());
        }
        if (hi <= lo) hi = lo + 1.0;
        return std::pair<double, double>(lo, hi);
    };
    const auto [alo, ahi] = edges(a);
    const auto [blo, bhi] = edges(b);
    auto fill = [&](const std::vector<double>& xs, double lo, double hi, std::vector<double>& mass) {
        mass.assign(bins, 0.0);
        if (xs.empty()) return;
        for (double v : xs) {
            int k = static_cast<int>((v - lo) / (hi - lo) * bins);
            k = std::clamp(k, 0, bins - 1);
            mass[static_cast<std::size_t>(k)] += 1.0;
        }
        for (double& mv : mass) mv /= static_cast<double>(xs.size());
    };
    std::vector<double> ma, mb;
    fill(a, alo, ahi, ma);
    fill(b, blo, bhi, mb);
    out << "# bin_center_" << label_a << " mass_" << label_a << " bin_center_" << label_b << " mass_" << label_b
        << '\n';
    for (int k = 0; k < bins; ++k) {
        const double ca = alo + (k + 0.5) * (ahi - alo) / bins;
        const double cb = blo + (k + 0.5) * (bhi - blo) / bins;
        out << format_double(ca) << ' ' << format_double(ma[static_cast<std::size_t>(k)]) << ' '
            << format_double(cb) << ' ' << format_double(mb[static_cast<std::size_t>(k)]) << '\n';
    }
}

} // namespace

void emit_csv(const ExperimentResult& result, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const Shape sh = shape_of(result);
    const char* axis = sweep_axis_name(result.axis);

    {
        std::ofstream out = open_in_dir(out_dir, "raw_runs.csv");
        out << "axis,point,scenario,run,method,final_count,mean_speed,last_change_slot\n";
        for (const RunRow& r : result.rows) {
            out << axis << ',' << format_double(r.point_value) << ',' << r.scenario_index << ',' << r.run_index
                << ',' << seed_method_name(r.method) << ',' << r.final_count << ','
                << format_double(r.mean_speed) << ',' << r.last_change_slot << '\n';
        }
    }
    {
        std::vector<std::vector<Stats>> finals, speeds;
        aggregate_runs(result, sh, finals, speeds);
        std::ofstream out = open_in_dir(out_dir, "aggregate.csv");
        out << "axis,point,method,runs,final_mean,final_std,final_stderr,speed_mean,speed_std,speed_stderr\n";
        for (std::size_t p = 0; p < sh.P; ++p) {
            for (std::size_t m = 0; m < sh.M; ++m) {
                const Stats& f = finals[p][m];
                const Stats& v = speeds[p][m];
                out << axis << ',' << format_double(result.points[p]) << ','
                    << seed_method_name(result.cfg.methods[m]) << ',' << f.n << ',' << format_double(f.mean)
                    << ',' << format_double(f.sd) << ',' << format_double(f.se) << ',' << format_double(v.mean)
                    << ',' << format_double(v.sd) << ',' << format_double(v.se) << '\n';
            }
        }
    }
    {
        std::ofstream out = open_in_dir(out_dir, "delay_pdf.csv");
        out << "axis,point,method,delay_slots,pdf\n";
        for (std::size_t p = 0; p < sh.P; ++p) {
            for (std::size_t m = 0; m < sh.M; ++m) {
                for (const auto& [delay, mass] : delay_mass(result, sh, p, m)) {
                    out << axis << ',' << format_double(result.points[p]) << ','
                        << seed_method_name(result.cfg.methods[m]) << ',' << delay << ','
                        << format_double(mass) << '\n';
                }
            }
        }
    }
    {
        std::ofstream out = open_in_dir(out_dir, "scores.csv");
        out << "axis,point,scenario,ue_id,sv_d2d,power_influence,power_connectivity\n";
        for (const ScoreRow& r : result.score_rows) {
            out << axis << ',' << format_double(r.point_value) << ',' << r.scenario_index << ',' << r.ue << ','
                << format_double(r.sv_d2d) << ',' << format_double(r.power_influence) << ','
                << format_double(r.power_connectivity) << '\n';
        }
    }
    if (!result.mobility_rows.empty()) {
        {
            std::ofstream out = open_in_dir(out_dir, "mobility_runs.csv");
            out << "axis,point,scenario,run,epoch,final_keep,final_reselect,gap\n";
            for (const MobilityRow& r : result.mobility_rows) {
                const std::int64_t gap =
                    static_cast<std::int64_t>(r.final_reselect) - static_cast<std::int64_t>(r.final_keep);
                out << axis << ',' << format_double(r.point_value) << ',' << r.scenario_index << ','
                    << r.run_index << ',' << r.epoch << ',' << r.final_keep << ',' << r.final_reselect << ','
                    << gap << '\n';
            }
        }
        std::ofstream out = open_in_dir(out_dir, "mobility_aggregate.csv");
        out << "axis,point,samples,gap_mean,gap_std,gap_stderr\n";
        for (std::size_t p = 0; p < sh.P; ++p) {
            std::vector<double> gaps;
            for (const MobilityRow& r : result.mobility_rows) {
                if (r.point_index == p)
                    gaps.push_back(static_cast<double>(r.final_reselect) - static_cast<double>(r.final_keep));
            }
            const Stats g = stats_of(gaps);
            out << axis << ',' << format_double(result.points[p]) << ',' << g.n << ',' << format_double(g.mean)
                << ',' << format_double(g.sd) << ',' << format_double(g.se) << '\n';
        }
    }
    if (!result.traces.empty()) {
        const std::filesystem::path dir(out_dir);
        write_trace_csv(result.traces, (dir / "traces.csv").string());
        write_delay_csv(result.traces, (dir / "delays.csv").string());
    }
    if (!result.warnings.empty()) {
        std::ofstream out = open_in_dir(out_dir, "warnings.txt");
        for (const std::string& w : result.warnings) out << w << '\n';
    }
}

void emit_plot_data(const ExperimentResult& result, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const Shape sh = shape_of(result);
    std::vector<std::vector<Stats>> finals, speeds;
    aggregate_runs(result, sh, finals, speeds);

    auto method_columns = [&](std::ofstream& out, const char* axis_label, const char* what) {
        out << "# " << axis_label;
        for (SeedMethod m : result.cfg.methods)
            out << ' ' << what << '_' << method_slug(m) << " stderr_" << method_slug(m);
        out << '\n';
    };
    auto emit_curve = [&](const char* name, const std::vector<std::vector<Stats>>& agg, const char* axis_label,
                          const char* what) {
        std::ofstream out = open_in_dir(out_dir, name);
        method_columns(out, axis_label, what);
        for (std::size_t p = 0; p < sh.P; ++p) {
            out << format_double(result.points[p]);
            for (std::size_t m = 0; m < sh.M; ++m)
                out << ' ' << format_double(agg[p][m].mean) << ' ' << format_double(agg[p][m].se);
            out << '\n';
        }
    };

    if (result.axis == SweepAxis::d_fraction) emit_curve("fig2.dat", speeds, "d_fraction", "speed");
    if (result.axis == SweepAxis::n_ues) {
        emit_curve("fig4.dat", finals, "n_ues", "final");
        emit_curve("fig5.dat", speeds, "n_ues", "speed");
    }

    {
        // Score histograms at the first sweep point, pooled over scenarios.
        std::vector<double> sv, power;
        for (const ScoreRow& r : result.score_rows) {
            if (r.point_index != 0) continue;
            sv.push_back(r.sv_d2d);
            power.push_back(r.power_influence);
        }
        std::ofstream out = open_in_dir(out_dir, "fig3.dat");
        write_histogram_columns(out, sv, power, "sv", "offloading_power");
    }
    {
        // Delay mass function per method at the first sweep point.
        std::set<std::uint32_t> delays;
        std::vector<std::map<std::uint32_t, double>> mass(sh.M);
        for (std::size_t m = 0; m < sh.M; ++m) {
            mass[m] = delay_mass(result, sh, 0, m);
            for (const auto& [d, unused] : mass[m]) delays.insert(d);
        }
        std::ofstream out = open_in_dir(out_dir, "fig8.dat");
        out << "# delay_slots";
        for (SeedMethod m : result.cfg.methods) out << " pdf_" << method_slug(m);
        out << '\n';
        for (std::uint32_t d : delays) {
            out << d;
            for (std::size_t m = 0; m < sh.M; ++m) {
                const auto it = mass[m].find(d);
                out << ' ' << format_double(it == mass[m].end() ? 0.0 : it->second);
            }
            out << '\n';
        }
    }
    if (!result.mobility_rows.empty()) {
        std::ofstream out = open_in_dir(out_dir, "fig9.dat");
        out << "# mobility_speed gap_mean gap_stderr\n";
        for (std::size_t p = 0; p < sh.P; ++p) {
            std::vector<double> gaps;
            for (const MobilityRow& r : result.mobility_rows) {
                if (r.point_index == p)
                    gaps.push_back(static_cast<double>(r.final_reselect) - static_cast<double>(r.final_keep));
            }
            const Stats g = stats_of(gaps);
            out << format_double(result.points[p]) << ' ' << format_double(g.mean) << ' ' << format_double(g.se)
                << '\n';
        }
    }
}

} // namespace d2d
