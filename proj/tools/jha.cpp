// SPDX-License-Identifier: Apache-2.0
//
// janus-holo: tensor impedance holographic antenna synthesis and analysis
// Copyright (C) 2026 The janus-holo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Batch front-end: ingest -> synth -> radiate / compare -> layout, or all at once with
// `report`. Every output is a pure function of the inputs.

#include "jha/aperture.hpp"
#include "jha/compare.hpp"
#include "jha/constants.hpp"
#include "jha/design_spec.hpp"
#include "jha/error.hpp"
#include "jha/hologram.hpp"
#include "jha/io.hpp"
#include "jha/layout.hpp"
#include "jha/log.hpp"
#include "jha/svg.hpp"
#include "jha/unitcell.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace jha;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_validation = 3;
constexpr int exit_numerical = 4;

struct Options {
    std::string out = ".";
    std::string spec;
    std::optional<std::string> freq;
    double cut = 0.0;
    bool strict = false;
    bool force_monotone = false;
    double p_mm = 3.0;
    std::string dispersion;
    std::string curve;
    std::string field;
    std::string baseline = "transverse";
    std::optional<double> theta;
    double step = 0.5;
    int uv_n = 201;
    std::string formats = "json,csv,svg";
};

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    for (auto part : io::split_csv_line(s)) {
        auto t = io::trim(part);
        if (!t.empty())
            out.emplace_back(t);
    }
    return out;
}

std::vector<double> parse_freqs(const std::optional<std::string> &s, std::optional<double> fallback)
{
    if (!s) {
        if (fallback)
            return {*fallback};
        throw UsageError("--freq is required");
    }
    std::vector<double> freqs;
    for (const auto &item : split_list(*s)) {
        try {
            freqs.push_back(io::parse_double(item, "--freq", 0));
        } catch (const ValidationError &) {
            throw UsageError("--freq: '" + item + "' is not a number");
        }
        if (!(freqs.back() > 0.0))
            throw UsageError("--freq: frequencies must be positive");
    }
    if (freqs.empty())
        throw UsageError("--freq: empty frequency list");
    return freqs;
}

fs::path out_dir(const Options &o)
{
    fs::path dir(o.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw UsageError("--out: cannot create directory '" + o.out + "'");
    return dir;
}

void write(const fs::path &path, std::string_view content)
{
    io::write_file(path, content);
    std::cout << "wrote " << path.generic_string() << "\n";
}

std::string dump(const json &doc) { return doc.dump(2) + "\n"; }

DesignSpec load_spec(const Options &o)
{
    if (o.spec.empty())
        throw UsageError("--spec is required");
    const auto text = io::read_file(o.spec);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError("spec '" + o.spec + "': " + e.what());
    }
    return DesignSpec::from_json(doc);
}

std::string freq_tag(double f) { return "f" + io::format_double(f) + "GHz"; }

// ---------------------------------------------------------------- ingest

json ingest(const Options &o, const fs::path &dir)
{
    if (o.dispersion.empty())
        throw UsageError("--dispersion is required");
    const auto freqs = parse_freqs(o.freq, std::nullopt);
    if (freqs.size() != 1)
        throw UsageError("ingest takes exactly one --freq");
    const auto table = unitcell::DispersionTable::from_csv(io::read_file(o.dispersion), o.p_mm);
    const auto mode = o.force_monotone ? unitcell::MonotoneMode::force : unitcell::MonotoneMode::reject;
    const auto curve = unitcell::build_zg_curve(table, freqs[0], mode);
    write(dir / "zg_curve.csv", curve.to_csv());
    json summary{{"freq_ghz", freqs[0]},
                 {"periodicity_mm", o.p_mm},
                 {"knot_count", curve.knots().size()},
                 {"gap_range_mm", {curve.min_gap(), curve.max_gap()}},
                 {"reactance_range_ohm", {curve.min_reactance(), curve.max_reactance()}},
                 {"forced_monotone", o.force_monotone}};
    write(dir / "ingest_summary.json", dump(summary));
    return summary;
}

// ---------------------------------------------------------------- synth

void write_maps(const hologram::TensorImpedanceField &field, const fs::path &dir)
{
    const int n = field.n_cells();
    std::vector<double> zxx, zxy, zyy, xmax, angle;
    for (const auto &c : field.cells()) {
        zxx.push_back(c.z.xx);
        zxy.push_back(c.z.xy);
        zyy.push_back(c.z.yy);
        xmax.push_back(c.x_eff_max_ohm);
        angle.push_back(rad_to_deg(c.direction_rad));
    }
    write(dir / "map_zxx.svg", svg::heatmap_autoscale(zxx, n, n, "Zxx reactance (ohm)"));
    write(dir / "map_zxy.svg", svg::heatmap_autoscale(zxy, n, n, "Zxy reactance (ohm)"));
    write(dir / "map_zyy.svg", svg::heatmap_autoscale(zyy, n, n, "Zyy reactance (ohm)"));
    write(dir / "map_xeffmax.svg", svg::heatmap_autoscale(xmax, n, n, "Zeff-max (ohm)"));
    write(dir / "map_angle.svg", svg::heatmap(angle, n, n, 0.0, 180.0, "principal angle (deg)"));
}

hologram::TensorImpedanceField synth(const DesignSpec &spec, const fs::path &dir)
{
    auto field = hologram::synthesize_field(spec);
    write(dir / "field.csv", field.to_csv());
    write_maps(field, dir);
    return field;
}

// ---------------------------------------------------------------- radiate

json phase_json(const aperture::PhaseStats &p)
{
    return {{"center_deg", p.center_deg},
            {"mean_phase_deg", p.mean_phase_deg},
            {"mean_ephi_over_etheta_db", p.mean_ratio_db},
            {"n_samples", p.n_samples}};
}

json metrics_json(const aperture::PatternCut &cut, const DesignSpec &spec, double f, bool extrapolated)
{
    const auto m = aperture::beam_metrics(cut, spec.handedness);
    return {{"freq_ghz", f},
            {"extrapolated", extrapolated},
            {"lhcp_peak_deg", cut.theta_deg[cut.argmax(cut.e_lhcp)]},
            {"rhcp_peak_deg", cut.theta_deg[cut.argmax(cut.e_rhcp)]},
            {"cp_peak_deg", m.cp_peak_deg},
            {"cp_peak_db", m.cp_peak_db},
            {"cp_axial_ratio_db", m.cp_axial_ratio_db},
            {"cp_suppression_db", m.cp_suppression_db},
            {"lp_peak_deg", m.lp_peak_deg},
            {"lp_peak_db", m.lp_peak_db},
            {"lp_axial_ratio_db", m.lp_axial_ratio_db},
            {"lp_ephi_over_etheta_db", m.lp_ephi_over_etheta_db},
            {"cp_phase", phase_json(m.cp_phase)},
            {"lp_phase", phase_json(m.lp_phase)}};
}

json radiate(const hologram::TensorImpedanceField &field, const DesignSpec &spec, const std::vector<double> &freqs,
             const Options &o, const fs::path &dir)
{
    json per_freq = json::array();
    // Principal planes always, plus the requested cut.
    std::vector<double> cuts{0.0, 90.0};
    if (std::find(cuts.begin(), cuts.end(), o.cut) == cuts.end())
        cuts.push_back(o.cut);
    const auto directions = aperture::cut_directions(cuts, o.step);
    for (double f : freqs) {
        const auto ap = aperture::aperture_fields(field, spec, f);
        const auto ff = aperture::compute_far_field(ap, directions, spec.name);
        const auto cut = aperture::pattern_cut(ff, o.cut);
        const auto tag = freq_tag(f);
        write(dir / ("farfield_" + tag + ".csv"), ff.to_csv());
        for (double phi : cuts)
            write(dir / ("cut_phi" + io::format_double(phi) + "_" + tag + ".csv"),
                  aperture::pattern_cut(ff, phi).to_csv());

        const auto uv = aperture::compute_uv_map(ap, o.uv_n);
        write(dir / ("uvmap_" + tag + ".csv"), uv.to_csv());
        double ref = 0.0;
        for (const auto &c : uv.cells)
            ref = std::max({ref, std::abs(c.e_lhcp), std::abs(c.e_rhcp)});
        std::vector<double> lhcp_db(uv.cells.size(), std::nan(""));
        for (std::size_t k = 0; k < uv.cells.size(); ++k)
            if (uv.visible[k] && ref > 0.0)
                lhcp_db[k] = std::max(-40.0, 20.0 * std::log10(std::abs(uv.cells[k].e_lhcp) / ref + 1e-300));
        write(dir / ("uvmap_lhcp_" + tag + ".svg"), svg::heatmap(lhcp_db, uv.n, uv.n, -40.0, 0.0, "LHCP (dB), u-v"));

        per_freq.push_back(metrics_json(cut, spec, f, ap.extrapolated));
    }
    auto spread = [&](const char *key) {
        double lo = 1e300, hi = -1e300;
        for (const auto &m : per_freq) {
            lo = std::min(lo, m[key].get<double>());
            hi = std::max(hi, m[key].get<double>());
        }
        return hi - lo;
    };
    json metrics{{"design", spec.name},
                 {"handedness", to_string(spec.handedness)},
                 {"phi_cut_deg", o.cut},
                 {"theta_step_deg", o.step},
                 {"design_theta_cp_deg", spec.theta_cp_deg},
                 {"design_theta_lp_deg", -spec.theta_lp_deg},
                 {"frequencies", per_freq},
                 {"cp_peak_spread_deg", spread("cp_peak_deg")},
                 {"lp_peak_spread_deg", spread("lp_peak_deg")}};
    write(dir / "metrics.json", dump(metrics));
    return metrics;
}

hologram::TensorImpedanceField field_for(const Options &o, const DesignSpec &spec)
{
    if (o.field.empty())
        return hologram::synthesize_field(spec);
    auto field = hologram::TensorImpedanceField::from_csv(io::read_file(o.field));
    if (field.n_cells() != spec.n_cells ||
        std::abs(field.pitch_m() * 1e3 - spec.lattice_p_mm) > 1e-9 * spec.lattice_p_mm)
        throw ValidationError("field '" + o.field + "' does not match the spec's lattice");
    return field;
}

// ---------------------------------------------------------------- compare

json compare_cmd_run(const DesignSpec &spec, const Options &o, const fs::path &dir)
{
    const double theta = o.theta.value_or(spec.theta_cp_deg);
    const auto run = compare::run_comparison(spec, o.baseline, deg_to_rad(theta), o.cut, o.step);
    const auto a = aperture::pattern_cut(run.proposed, o.cut);
    const auto b = aperture::pattern_cut(run.baseline, o.cut);
    const bool lhcp = spec.handedness == Handedness::lhcp;
    const auto &a_co = lhcp ? a.e_lhcp : a.e_rhcp;
    const auto &a_x = lhcp ? a.e_rhcp : a.e_lhcp;
    const auto &b_co = lhcp ? b.e_lhcp : b.e_rhcp;
    const auto &b_x = lhcp ? b.e_rhcp : b.e_lhcp;
    const double ref = std::abs(a_co[a.argmax(a_co)]);
    auto db = [&](cplx v) { return 20.0 * std::log10(std::max(std::abs(v) / ref, 1e-15)); };

    std::string csv = "theta_deg,proposed_copol_db,proposed_crosspol_db,baseline_copol_db,baseline_crosspol_db\n";
    for (std::size_t k = 0; k < a.theta_deg.size(); ++k)
        csv += io::format_double(a.theta_deg[k]) + ',' + io::format_double(db(a_co[k])) + ',' +
               io::format_double(db(a_x[k])) + ',' + io::format_double(db(b_co[k])) + ',' +
               io::format_double(db(b_x[k])) + '\n';
    write(dir / "compare_cut.csv", csv);

    auto summary = [](const aperture::PolarizationSummary &s) {
        return json{{"copol_peak_deg", s.copol_peak_deg},
                    {"copol_peak_db", s.copol_peak_db},
                    {"max_crosspol_db", s.max_crosspol_db},
                    {"max_crosspol_deg", s.max_crosspol_deg},
                    {"suppression_db", s.suppression_db}};
    };
    const auto &r = run.report;
    json report{{"design", spec.name},
                {"baseline", o.baseline},
                {"theta_l_deg", theta},
                {"phi_cut_deg", r.phi_cut_deg},
                {"freq_ghz", compare::center_band(spec).freq_ghz},
                {"proposed", summary(r.proposed)},
                {"baseline_pattern", summary(r.baseline)},
                {"crosspol_delta_db", r.baseline.max_crosspol_db - r.proposed.max_crosspol_db},
                {"suppression_delta_db", r.suppression_delta_db},
                {"copol_delta_db", r.copol_delta_db}};
    write(dir / "compare_report.json", dump(report));
    return report;
}

// ---------------------------------------------------------------- layout

json write_layout(const layout::Layout &lay, const Options &o, const fs::path &dir)
{
    const auto formats = split_list(o.formats);
    if (formats.empty())
        throw UsageError("--format: empty format list");
    for (const auto &f : formats)
        (void)layout::export_layout(layout::Layout{}, f); // rejects unknown names up front
    for (const auto &f : formats)
        write(dir / ("layout." + f), layout::export_layout(lay, f));
    double gmin = 1e300, gmax = -1e300;
    for (const auto &c : lay.cells) {
        gmin = std::min(gmin, c.g_mm);
        gmax = std::max(gmax, c.g_mm);
    }
    return {{"n_cells", lay.n_cells},
            {"board_extent_mm", lay.board_extent_mm()},
            {"gap_range_mm", {gmin, gmax}},
            {"clamped_cells", lay.clamped_count()}};
}

layout::ClampPolicy policy(const Options &o)
{
    return o.strict ? layout::ClampPolicy::strict : layout::ClampPolicy::clamp_with_warning;
}

json layout_cmd(const Options &o, const fs::path &dir)
{
    if (o.field.empty())
        throw UsageError("--field is required");
    if (o.curve.empty())
        throw UsageError("--curve is required");
    const auto field = hologram::TensorImpedanceField::from_csv(io::read_file(o.field));
    const auto curve = unitcell::ZgCurve::from_csv(io::read_file(o.curve));
    return write_layout(layout::realize_layout(field, curve, policy(o)), o, dir);
}

// ---------------------------------------------------------------- report

unitcell::ZgCurve report_curve(const Options &o, const DesignSpec &spec, std::string &source)
{
    if (!o.curve.empty()) {
        source = o.curve;
        return unitcell::ZgCurve::from_csv(io::read_file(o.curve));
    }
    // Placeholder cell until a measured sweep is supplied; flagged in the report.
    source = "synthetic";
    log::warn("no --curve given; using the bundled SYNTHETIC unit-cell curve");
    unitcell::SyntheticCellModel model;
    model.periodicity_mm = spec.lattice_p_mm;
    const auto table = unitcell::synthetic_dispersion_table(model, {spec.center_freq_ghz()});
    return unitcell::build_zg_curve(table, spec.center_freq_ghz());
}

void report(const Options &o, const fs::path &dir)
{
    const auto spec = load_spec(o);
    const auto freqs = !o.freq ? std::vector<double>{spec.f_lower_ghz, spec.center_freq_ghz(), spec.f_upper_ghz}
                                      : parse_freqs(o.freq, std::nullopt);
    const auto field = synth(spec, dir);
    const auto metrics = radiate(field, spec, freqs, o, dir);
    const auto cmp = compare_cmd_run(spec, o, dir);
    std::string source;
    const auto curve = report_curve(o, spec, source);
    write(dir / "zg_curve.csv", curve.to_csv());
    const auto lay = write_layout(layout::realize_layout(field, curve, policy(o)), o, dir);
    json doc{{"design", spec.name},
             {"spec", spec.to_json()},
             {"metrics", metrics},
             {"compare", cmp},
             {"curve_source", source},
             {"layout", lay}};
    write(dir / "report.json", dump(doc));
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"janus-holo: tensor impedance holographic antenna synthesis and analysis", "jha"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_out = [&](CLI::App *s) { s->add_option("--out", o.out, "output directory")->capture_default_str(); };
    auto add_spec = [&](CLI::App *s) { s->add_option("--spec", o.spec, "design spec JSON"); };
    auto add_freq = [&](CLI::App *s, const char *help) { s->add_option("--freq", o.freq, help); };
    auto add_sampling = [&](CLI::App *s) {
        s->add_option("--cut", o.cut, "phi of the pattern cut (deg)")->capture_default_str();
        s->add_option("--step", o.step, "theta step (deg)")->capture_default_str()->check(CLI::PositiveNumber);
    };

    auto *ingest_cmd = app.add_subcommand("ingest", "dispersion sweep -> Z(g) curve");
    ingest_cmd->add_option("--dispersion", o.dispersion, "CSV g_mm,freq_ghz,phi_x_rad,phi_y_rad");
    ingest_cmd->add_option("--p-mm", o.p_mm, "lattice period (mm)")->capture_default_str();
    add_freq(ingest_cmd, "extraction frequency (GHz)");
    ingest_cmd->add_flag("--force-monotone", o.force_monotone, "isotonic fit instead of rejecting");
    add_out(ingest_cmd);

    auto *synth_cmd = app.add_subcommand("synth", "design spec -> impedance field and maps");
    add_spec(synth_cmd);
    add_out(synth_cmd);

    auto *radiate_cmd = app.add_subcommand("radiate", "impedance field -> far field, cuts, metrics");
    add_spec(radiate_cmd);
    radiate_cmd->add_option("--field", o.field, "field CSV (synthesised from the spec if omitted)");
    add_freq(radiate_cmd, "GHz[,GHz...] (default: band centre)");
    add_sampling(radiate_cmd);
    radiate_cmd->add_option("--uv-n", o.uv_n, "u-v map samples per axis")->capture_default_str()->check(
        CLI::Range(3, 2001));
    add_out(radiate_cmd);

    auto *compare_cmd = app.add_subcommand("compare", "proposed vs baseline single-beam cross-pol");
    add_spec(compare_cmd);
    compare_cmd->add_option("--baseline", o.baseline, "proposed | transverse | projected | custom:ax,ay[,az]")
        ->capture_default_str();
    compare_cmd->add_option("--theta", o.theta, "beam angle (deg, default: theta_cp)");
    add_sampling(compare_cmd);
    add_out(compare_cmd);

    auto *layout_cmd_ = app.add_subcommand("layout", "impedance field + Z(g) curve -> board geometry");
    layout_cmd_->add_option("--field", o.field, "field CSV");
    layout_cmd_->add_option("--curve", o.curve, "Z(g) curve CSV");
    layout_cmd_->add_flag("--strict", o.strict, "out-of-range impedance is an error");
    layout_cmd_->add_option("--format", o.formats, "json,csv,svg")->capture_default_str();
    add_out(layout_cmd_);

    auto *report_cmd = app.add_subcommand("report", "synth + radiate + compare + layout in one run");
    add_spec(report_cmd);
    report_cmd->add_option("--curve", o.curve, "Z(g) curve CSV (bundled synthetic curve if omitted)");
    add_freq(report_cmd, "GHz[,GHz...] (default: both band edges and the centre)");
    add_sampling(report_cmd);
    report_cmd->add_option("--baseline", o.baseline, "compare baseline")->capture_default_str();
    report_cmd->add_flag("--strict", o.strict, "out-of-range impedance is an error");
    report_cmd->add_option("--uv-n", o.uv_n, "u-v map samples per axis")->capture_default_str()->check(
        CLI::Range(3, 2001));
    add_out(report_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*ingest_cmd) {
            const auto dir = out_dir(o);
            ingest(o, dir);
        } else if (*synth_cmd) {
            const auto spec = load_spec(o);
            synth(spec, out_dir(o));
        } else if (*radiate_cmd) {
            const auto spec = load_spec(o);
            const auto freqs = parse_freqs(o.freq, spec.center_freq_ghz());
            const auto field = field_for(o, spec);
            radiate(field, spec, freqs, o, out_dir(o));
        } else if (*compare_cmd) {
            const auto spec = load_spec(o);
            compare_cmd_run(spec, o, out_dir(o));
        } else if (*layout_cmd_) {
            layout_cmd(o, out_dir(o));
        } else if (*report_cmd) {
            report(o, out_dir(o));
        }
    } catch (const unitcell::NonMonotoneError &e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto &k : e.violations())
            std::cerr << "  violating knot: g = " << io::format_double(k.gap_mm)
                      << " mm, X = " << io::format_double(k.x_eff_ohm) << " ohm\n";
        return exit_validation;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::usage:
            return exit_usage;
        case ErrorKind::validation:
            return exit_validation;
        case ErrorKind::numerical:
            return exit_numerical;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_ok;
}
