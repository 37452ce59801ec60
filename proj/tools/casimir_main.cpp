// casimir: command-line front end for the parallel-plate dispersion
// force engine. Subcommands run the Matsubara/zero-temperature/real-axis
// engines and emit deterministic CSV or JSON.

#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/fresnel.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/relaxation.hpp"
#include "casimir/report.hpp"
#include "casimir/scales.hpp"
#include "casimir/spectral.hpp"
#include "casimir/units.hpp"

namespace {

using nlohmann::json;
using namespace casimir;

struct OutputSpec {
    std::string format = "csv"; // csv | json
    std::string path;           // empty = stdout
};

MaterialModel resolve_material(const std::string& spec) {
    if (spec == "ideal" || spec == "perfect") return MaterialModel::perfect_conductor();
    if (spec == "vacuum") return MaterialModel::vacuum();
    if (spec == "gold") return MaterialModel::gold();
    if (spec.rfind("plasma:", 0) == 0)
        return MaterialModel::plasma(
            parse_quantity(spec.substr(7), Quantity::PlasmaEnergy));
    if (spec.rfind("drude:", 0) == 0) {
        const std::string rest = spec.substr(6);
        const size_t comma = rest.find(',');
        if (comma == std::string::npos)
            throw parse_error("drude material needs 'drude:<energy>,<time>', got '" +
                              spec + "'");
        return MaterialModel::drude(
            parse_quantity(rest.substr(0, comma), Quantity::PlasmaEnergy),
            parse_quantity(rest.substr(comma + 1), Quantity::Time));
    }
    const bool is_path = spec.size() > 5 && spec.substr(spec.size() - 5) == ".json";
    if (is_path || spec.front() == '@') {
        const std::string path = spec.front() == '@' ? spec.substr(1) : spec;
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open material file '" + path + "'");
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw parse_error("material file '" + path + "': " + e.what());
        }
        return material_from_json(doc);
    }
    throw parse_error("unknown material '" + spec +
                      "' (use ideal|vacuum|gold, plasma:<E>, drude:<E>,<tau>, or a .json file)");
}

// "min:max:N[:log|lin]", a comma list, or a single quantity.
std::vector<double> parse_values(const std::string& text, Quantity q) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> f;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ':')) f.push_back(tok);
        if (f.size() < 3 || f.size() > 4)
            throw parse_error("range must be min:max:count[:log|lin], got '" + text + "'");
        const double lo = parse_quantity(f[0], q);
        const double hi = parse_quantity(f[1], q);
        const long n = std::stol(f[2]);
        const bool logspace = f.size() < 4 || f[3] == "log";
        if (f.size() == 4 && f[3] != "log" && f[3] != "lin")
            throw parse_error("range spacing must be 'log' or 'lin', got '" + f[3] + "'");
        if (n < 2) throw parse_error("range count must be >= 2");
        if (!(hi > lo)) throw parse_error("range must be strictly increasing");
        if (logspace && !(lo > 0.0)) throw parse_error("log range needs min > 0");
        for (long i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / (n - 1);
            out.push_back(logspace ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
        }
        return out;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_quantity(tok, q));
    if (out.empty()) throw parse_error("empty value list '" + text + "'");
    for (size_t i = 1; i < out.size(); ++i)
        if (!(out[i] > out[i - 1]))
            throw parse_error("value list must be strictly increasing: '" + text + "'");
    return out;
}

void emit_document(const CsvDocument& csv, const json& mirror, const OutputSpec& out) {
    std::ostringstream body;
    if (out.format == "csv")
        csv.write(body);
    else
        body << mirror.dump(2) << "\n";
    if (out.path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out.path);
        if (!f) throw parse_error("cannot open output file '" + out.path + "'");
        f << body.str();
    }
}

json meta_to_json(const std::vector<std::pair<std::string, std::string>>& meta) {
    json j = json::object();
    for (const auto& [k, v] : meta) j[k] = v;
    return j;
}

// shared table assembly: CSV plus its JSON mirror
struct Table {
    CsvDocument csv;
    std::vector<std::pair<std::string, std::string>> meta_pairs;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void meta(const std::string& k, const std::string& v) {
        csv.meta(k, v);
        meta_pairs.emplace_back(k, v);
    }
    void meta(const std::string& k, double v) { meta(k, format_double(v)); }
    void header(std::vector<std::string> cols) {
        columns = cols;
        csv.header(std::move(cols));
    }
    void row(const std::vector<double>& cells) {
        csv.numeric_row(cells);
        rows.push_back(cells);
    }
    json mirror() const {
        return json{{"meta", meta_to_json(meta_pairs)},
                    {"columns", columns},
                    {"rows", rows}};
    }
    void emit(const OutputSpec& out) const { emit_document(csv, mirror(), out); }
};

struct EngineArgs {
    std::string m1 = "ideal", m2 = "ideal";
    std::string gaps = "1um";
    std::string temps = "300K";
    QuadratureConfig cfg;
    OutputSpec out;
};

void add_quad_options(CLI::App* cmd, QuadratureConfig& cfg) {
    cmd->add_option("--k-nodes", cfg.k_nodes, "Gauss-Legendre order per panel (>= 16)");
    cmd->add_option("--matsubara-max", cfg.matsubara_max,
                    "explicit Matsubara term count (0 = auto)");
    cmd->add_option("--rel-tol", cfg.rel_tol, "relative tolerance (0, 1e-2]");
    cmd->add_option("--temp-step", cfg.temp_step_fraction,
                    "entropy differencing step fraction");
}

void add_output_options(CLI::App* cmd, OutputSpec& out) {
    cmd->add_option("--format", out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out.path, "output path (default stdout)");
}

void common_meta(Table& t, const std::string& sub, const EngineArgs& a) {
    t.meta("subcommand", sub);
    t.meta("m1", a.m1);
    t.meta("m2", a.m2);
    t.meta("k_nodes", static_cast<double>(a.cfg.k_nodes));
    t.meta("matsubara_max", static_cast<double>(a.cfg.matsubara_max));
    t.meta("rel_tol", a.cfg.rel_tol);
    t.meta("temp_step_fraction", a.cfg.temp_step_fraction);
    t.meta("constants", constants::version);
    t.meta("engine_version", engine_version);
}

PressureBreakdown pressure_any(const PlateSystem& sys, double T,
                               const QuadratureConfig& cfg) {
    return T > 0.0 ? pressure(sys, T, cfg) : pressure_zero_temperature(sys, cfg);
}

// ---------------------------------------------------------------- scales
int run_scales(const std::string& temps, const OutputSpec& out) {
    Table t;
    t.meta("subcommand", "scales");
    t.meta("constants", constants::version);
    t.meta("engine_version", engine_version);
    t.header({"T_K", "omega_T_rad_s", "omega_T_over_2pi_Hz", "lambda_T_m"});
    for (double T : parse_values(temps, Quantity::Temperature)) {
        const double wT = thermal_frequency(T);
        const double lam = T > 0.0 ? thermal_wavelength(T)
                                   : std::numeric_limits<double>::infinity();
        t.row({T, wT, wT / (2.0 * M_PI), lam});
    }
    t.emit(out);
    return 0;
}

// -------------------------------------------------------------- material
int run_material(const std::string& spec, const OutputSpec& out) {
    const MaterialModel m = resolve_material(spec);
    Table t;
    t.meta("subcommand", "material");
    t.meta("material", m.name());
    t.meta("constants", constants::version);
    t.meta("engine_version", engine_version);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    t.header({"omega_p_rad_s", "omega_p_eV", "tau_s", "lambda_p_m", "sigma_dc_S_m",
              "diffusivity_m2_s", "eps0_over_sigma_s"});
    double wp = nan, wp_eV = nan, tau = nan, lp = nan, sdc = nan, D = nan, trelax = nan;
    if (m.is_plasma() || m.is_drude()) {
        wp = m.omega_p();
        wp_eV = wp * constants::hbar / constants::eV;
        lp = plasma_wavelength(m);
    }
    if (m.is_drude()) {
        tau = m.tau();
        sdc = dc_conductivity(m);
        D = magnetic_diffusivity(m);
        trelax = constants::eps0 / sdc;
    }
    t.row({wp, wp_eV, tau, lp, sdc, D, trelax});
    t.emit(out);
    return 0;
}

// ------------------------------------------- pressure / free-energy / entropy
int run_pointwise(const std::string& sub, const EngineArgs& a) {
    const MaterialModel m1 = resolve_material(a.m1);
    const MaterialModel m2 = resolve_material(a.m2);
    const std::vector<double> gaps = parse_values(a.gaps, Quantity::Length);
    const std::vector<double> temps = parse_values(a.temps, Quantity::Temperature);

    Table t;
    common_meta(t, sub, a);
    if (sub == "pressure")
        t.header({"d_m", "T_K", "P_total_Pa", "P_TE_Pa", "P_TM_Pa", "P_n0_Pa", "err_Pa"});
    else if (sub == "free-energy")
        t.header({"d_m", "T_K", "F_total_J_m2", "F_TE_J_m2", "F_TM_J_m2", "F_n0_J_m2",
                  "err_J_m2"});
    else
        t.header({"d_m", "T_K", "S_J_K_m2", "S_coarse_J_K_m2", "err_J_K_m2"});

    for (double d : gaps) {
        for (double T : temps) {
            const PlateSystem sys(m1, m2, d);
            if (sub == "pressure") {
                const PressureBreakdown p = pressure_any(sys, T, a.cfg);
                t.row({d, T, p.total, p.by_polarization.te, p.by_polarization.tm,
                       p.n0.total(), p.estimated_error});
            } else if (sub == "free-energy") {
                const FreeEnergyResult f = T > 0.0
                                               ? free_energy_area(sys, T, a.cfg)
                                               : free_energy_zero_temperature(sys, a.cfg);
                t.row({d, T, f.value, f.by_polarization.te, f.by_polarization.tm,
                       f.n0.total(), f.estimated_error});
            } else {
                const EntropyResult s = entropy_area(sys, T, a.cfg);
                t.row({d, T, s.value, s.coarse, s.estimated_error});
            }
        }
    }
    t.emit(a.out);
    return 0;
}

// ----------------------------------------------------------------- sweep
int run_sweep(const EngineArgs& a, bool with_thermal_correction) {
    const MaterialModel m1 = resolve_material(a.m1);
    const MaterialModel m2 = resolve_material(a.m2);
    const std::vector<double> gaps = parse_values(a.gaps, Quantity::Length);
    const std::vector<double> temps = parse_values(a.temps, Quantity::Temperature);

    struct Row {
        double d, T;
        PressureBreakdown p;
        double p0 = 0.0;
    };
    std::vector<Row> rows(gaps.size() * temps.size());

    // the zero-temperature reference depends on the gap only
    std::vector<double> p0_by_gap(gaps.size(), 0.0);

    // fan out across workers; assembly keeps the declared (d-major) order
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::future<void>> futures;
    std::atomic<size_t> next{0};
    auto work = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            const size_t gi = i / temps.size();
            const double d = gaps[gi];
            const double T = temps[i % temps.size()];
            const PlateSystem sys(m1, m2, d);
            Row r;
            r.d = d;
            r.T = T;
            r.p = pressure_any(sys, T, a.cfg);
            if (with_thermal_correction && i % temps.size() == 0)
                p0_by_gap[gi] = pressure_zero_temperature(sys, a.cfg).total;
            rows[i] = r;
        }
    };
    futures.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, work));
    for (auto& f : futures) f.get(); // rethrows engine failures

    Table t;
    common_meta(t, "sweep", a);
    std::vector<std::string> cols = {"d_m",     "T_K",     "P_total_Pa", "P_TE_Pa",
                                     "P_TM_Pa", "P_n0_Pa", "err_Pa"};
    if (with_thermal_correction) {
        cols.push_back("P_T0_Pa");
        cols.push_back("dP_thermal_Pa");
    }
    t.header(cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        std::vector<double> cells = {r.d,
                                     r.T,
                                     r.p.total,
                                     r.p.by_polarization.te,
                                     r.p.by_polarization.tm,
                                     r.p.n0.total(),
                                     r.p.estimated_error};
        if (with_thermal_correction) {
            const double p0 = p0_by_gap[i / temps.size()];
            cells.push_back(p0);
            cells.push_back(r.p.total - p0);
        }
        t.row(cells);
    }
    t.emit(a.out);
    return 0;
}

// -------------------------------------------------------------- spectrum
int run_spectrum(const EngineArgs& a, const std::string& omegas) {
    const MaterialModel m1 = resolve_material(a.m1);
    const MaterialModel m2 = resolve_material(a.m2);
    const double d = parse_values(a.gaps, Quantity::Length).at(0);
    const double T = parse_values(a.temps, Quantity::Temperature).at(0);
    const PlateSystem sys(m1, m2, d);

    std::vector<double> grid;
    for (double nu : parse_values(omegas, Quantity::Frequency))
        grid.push_back(2.0 * M_PI * nu); // rad/s

    Table t;
    common_meta(t, "spectrum", a);
    t.meta("d_m", d);
    t.meta("T_K", T);
    t.header({"omega_rad_s", "total_Pa_s", "zero_point_Pa_s", "thermal_Pa_s",
              "zp_TE_prop_Pa_s", "zp_TE_evan_Pa_s", "zp_TM_prop_Pa_s", "zp_TM_evan_Pa_s",
              "th_TE_prop_Pa_s", "th_TE_evan_Pa_s", "th_TM_prop_Pa_s", "th_TM_evan_Pa_s"});
    for (double w : grid) {
        const SpectrumRecord r = pressure_spectrum(sys, T, w, a.cfg);
        t.row({w, r.total(), r.zero_point(), r.thermal(), r.part[0][0][0],
               r.part[0][0][1], r.part[0][1][0], r.part[0][1][1], r.part[1][0][0],
               r.part[1][0][1], r.part[1][1][0], r.part[1][1][1]});
    }
    t.emit(a.out);
    return 0;
}

// ------------------------------------------------------------------- map
int run_map(const EngineArgs& a, int omega_points, int kappa_points) {
    const MaterialModel m1 = resolve_material(a.m1);
    const MaterialModel m2 = resolve_material(a.m2);
    const double d = parse_values(a.gaps, Quantity::Length).at(0);
    const PlateSystem sys(m1, m2, d);

    const std::vector<double> wgrid = default_omega_grid(sys, omega_points);
    const std::vector<double> kgrid = default_kappa_grid(sys, kappa_points);
    const SpectralMap map = spectral_map(sys, wgrid, kgrid);

    json sidecar = {
        {"subcommand", "map"},
        {"m1", a.m1},
        {"m2", a.m2},
        {"gap_m", d},
        {"omega_grid_rad_s", map.omega_grid},
        {"kappa_grid_per_m", map.kappa_grid},
        {"overlays",
         {{"kappa_cutoff_per_m", map.kappa_cutoff},
          {"diffusion_curve_rad_s",
           map.has_diffusion_curve ? json(map.diffusion_curve) : json(nullptr)}}},
        {"argmax", {{"omega_rad_s", map.argmax_omega}, {"kappa_per_m", map.argmax_kappa}}},
        {"max_value_si", map.max_value},
        {"cell_errors", map.cell_errors},
        {"constants", constants::version},
        {"engine_version", engine_version},
    };

    if (a.out.format == "json") {
        json full = sidecar;
        full["values"] = {{"TE", map.te}, {"TM", map.tm}, {"sum", map.sum}};
        emit_document(CsvDocument{}, full, a.out);
        return 0;
    }

    if (a.out.path.empty())
        throw parse_error("map in csv format requires --out (a JSON sidecar is "
                          "written next to the CSV)");

    CsvDocument csv;
    csv.meta("subcommand", "map");
    csv.meta("m1", a.m1);
    csv.meta("m2", a.m2);
    csv.meta("gap_m", d);
    csv.meta("constants", constants::version);
    csv.meta("engine_version", engine_version);
    csv.header({"omega_rad_s", "kappa_per_m", "pol", "value_si"});
    const size_t nk = map.kappa_grid.size();
    for (size_t i = 0; i < map.omega_grid.size(); ++i) {
        for (size_t j = 0; j < nk; ++j) {
            const std::string w = format_double(map.omega_grid[i]);
            const std::string k = format_double(map.kappa_grid[j]);
            csv.row({w, k, "TE", format_double(map.te[i * nk + j])});
            csv.row({w, k, "TM", format_double(map.tm[i * nk + j])});
            csv.row({w, k, "sum", format_double(map.sum[i * nk + j])});
        }
    }
    std::ofstream f(a.out.path);
    if (!f) throw parse_error("cannot open output file '" + a.out.path + "'");
    csv.write(f);

    std::string side_path = a.out.path;
    const size_t dot = side_path.rfind('.');
    side_path = (dot == std::string::npos ? side_path : side_path.substr(0, dot)) + ".json";
    std::ofstream sf(side_path);
    if (!sf) throw parse_error("cannot open sidecar file '" + side_path + "'");
    sf << sidecar.dump(2) << "\n";
    return 0;
}

// --------------------------------------------------------------- compare
int run_compare(const EngineArgs& a, const std::string& material) {
    const MaterialModel m = resolve_material(material);
    const double d = parse_values(a.gaps, Quantity::Length).at(0);
    const double T = parse_values(a.temps, Quantity::Temperature).at(0);
    const ModelComparison c = compare_models(d, T, m, a.cfg);

    Table t;
    common_meta(t, "compare", a);
    t.meta("material", m.name());
    t.header({"d_m", "T_K", "P_drude_Pa", "P_plasma_Pa", "difference_Pa",
              "plasma_n0_TE_Pa"});
    t.row({d, T, c.drude.total, c.plasma.total, c.difference, c.plasma_n0_te});
    t.emit(a.out);
    return 0;
}

// -------------------------------------------------------------- diagnose
int run_diagnose(const std::string& material, const std::string& temps,
                 const OutputSpec& out) {
    const MaterialModel m = resolve_material(material);
    const double T = parse_values(temps, Quantity::Temperature).at(0);
    const RelaxationReport r = relaxation_report(m, T);

    json j = to_json(r);
    j["material"] = m.name();
    j["T_K"] = T;
    j["constants"] = constants::version;
    j["engine_version"] = engine_version;

    if (out.format == "json") {
        emit_document(CsvDocument{}, j, out);
        return 0;
    }
    CsvDocument csv;
    csv.meta("subcommand", "diagnose");
    csv.meta("material", m.name());
    csv.meta("T_K", T);
    csv.meta("constants", constants::version);
    csv.meta("engine_version", engine_version);
    csv.header({"key", "value"});
    csv.row({"naive_rate_per_s", format_double(r.naive_rate)});
    csv.row({"root_slow_re_per_s", format_double(r.root_slow.real())});
    csv.row({"root_slow_im_rad_s", format_double(r.root_slow.imag())});
    csv.row({"root_fast_re_per_s", format_double(r.root_fast.real())});
    csv.row({"root_fast_im_rad_s", format_double(r.root_fast.imag())});
    csv.row({"decay_rate_per_s", format_double(r.decay_rate)});
    csv.row({"oscillation_rad_s", format_double(r.oscillation)});
    csv.row({"underdamped", r.underdamped ? "1" : "0"});
    csv.row({"diffusivity_m2_s", format_double(r.diffusivity)});
    csv.row({"inv_2pi_tau_Hz", format_double(r.inv_2pi_tau_Hz)});
    csv.row({"omega_T_over_2pi_Hz", format_double(r.omega_T_over_2pi_Hz)});
    emit_document(csv, j, out);
    return 0;
}

// ------------------------------------------------------------ asymptotes
int run_asymptotes(const EngineArgs& a) {
    const MaterialModel m1 = resolve_material(a.m1);
    const MaterialModel m2 = resolve_material(a.m2);
    const double d = parse_values(a.gaps, Quantity::Length).at(0);
    const double T = parse_values(a.temps, Quantity::Temperature).at(0);
    const PlateSystem sys(m1, m2, d);

    Table t;
    common_meta(t, "asymptotes", a);
    t.meta("d_m", d);
    t.meta("T_K", T);
    t.csv.header({"regime", "F_J_m2", "P_Pa"});
    t.columns = {"regime", "F_J_m2", "P_Pa"};
    json rows = json::array();
    auto add = [&](const char* name, Regime r) {
        try {
            const AsymptoteResult v = asymptote(r, sys, T);
            t.csv.row({name, format_double(v.free_energy), format_double(v.pressure)});
            rows.push_back({name, v.free_energy, v.pressure});
        } catch (const std::exception&) {
            // regime not applicable to this material/temperature: skip row
        }
    };
    add("nonretarded", Regime::NonRetarded);
    add("retarded", Regime::Retarded);
    add("thermal", Regime::Thermal);
    json mirror = {{"meta", meta_to_json(t.meta_pairs)},
                   {"columns", t.columns},
                   {"rows", rows}};
    emit_document(t.csv, mirror, a.out);
    return 0;
}

// ------------------------------------------------------------- real-axis
int run_pressure_real_axis(const EngineArgs& a) {
    const MaterialModel m1 = resolve_material(a.m1);
    const MaterialModel m2 = resolve_material(a.m2);
    const double d = parse_values(a.gaps, Quantity::Length).at(0);
    const double T = parse_values(a.temps, Quantity::Temperature).at(0);
    const PlateSystem sys(m1, m2, d);
    const PressureBreakdown p = pressure_real_axis(sys, T, a.cfg);

    Table t;
    common_meta(t, "pressure-real-axis", a);
    t.header({"d_m", "T_K", "P_total_Pa", "P_TE_Pa", "P_TM_Pa", "err_Pa"});
    t.row({d, T, p.total, p.by_polarization.te, p.by_polarization.tm,
           p.estimated_error});
    t.emit(a.out);
    return 0;
}

void error_line(int code, const std::string& message) {
    json j = {{"code", code}, {"message", message}};
    std::cerr << j.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dispersion (Casimir) pressures, free energies and entropies "
                 "between parallel plates: perfect-conductor, plasma and Drude models"};
    app.set_version_flag("--version", std::string(engine_version));
    app.require_subcommand(1);

    EngineArgs a;
    std::string material = "gold";
    std::string omegas;
    bool thermal_corr = false;
    int omega_points = 200, kappa_points = 200;

    auto add_engine = [&](CLI::App* cmd, bool gaps_sweep, bool temps_sweep) {
        cmd->add_option("--m1", a.m1, "first plate material");
        cmd->add_option("--m2", a.m2, "second plate material");
        cmd->add_option(gaps_sweep ? "--gaps" : "--gap", a.gaps,
                        gaps_sweep ? "gap list or min:max:N[:log|lin]" : "plate gap");
        cmd->add_option(temps_sweep ? "--temps" : "--temp", a.temps,
                        temps_sweep ? "temperature list or range" : "temperature");
        add_quad_options(cmd, a.cfg);
        add_output_options(cmd, a.out);
    };

    CLI::App* scales_cmd = app.add_subcommand("scales", "thermal frequency and wavelength");
    scales_cmd->add_option("--temp", a.temps, "temperature(s)");
    add_output_options(scales_cmd, a.out);

    CLI::App* material_cmd =
        app.add_subcommand("material", "derived material scales (lambda_p, sigma_DC, D)");
    material_cmd->add_option("--material", material, "material spec or JSON file");
    add_output_options(material_cmd, a.out);

    CLI::App* pressure_cmd = app.add_subcommand("pressure", "Casimir pressure");
    add_engine(pressure_cmd, false, false);
    CLI::App* free_cmd = app.add_subcommand("free-energy", "free energy per area");
    add_engine(free_cmd, false, false);
    CLI::App* entropy_cmd = app.add_subcommand("entropy", "entropy per area, -dF/dT");
    add_engine(entropy_cmd, false, false);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "pressure over gap/temperature grids");
    add_engine(sweep_cmd, true, true);
    sweep_cmd->add_flag("--thermal-correction", thermal_corr,
                        "add P(d,0) and P(d,T)-P(d,0) columns");

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "per-frequency pressure integrand");
    add_engine(spectrum_cmd, false, false);
    spectrum_cmd
        ->add_option("--omegas", omegas,
                     "frequency grid nu_min:nu_max:N[:log] (Hz/THz; omega = 2 pi nu)")
        ->required();

    CLI::App* map_cmd = app.add_subcommand("map", "evanescent mode-density map");
    add_engine(map_cmd, false, false);
    map_cmd->add_option("--omega-points", omega_points, "omega grid size");
    map_cmd->add_option("--kappa-points", kappa_points, "kappa grid size");

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Drude vs plasma with the same omega_p");
    compare_cmd->add_option("--material", material, "Drude material spec");
    compare_cmd->add_option("--gap", a.gaps, "plate gap");
    compare_cmd->add_option("--temp", a.temps, "temperature");
    add_quad_options(compare_cmd, a.cfg);
    add_output_options(compare_cmd, a.out);

    CLI::App* diagnose_cmd =
        app.add_subcommand("diagnose", "quasiparticle relaxation report");
    diagnose_cmd->add_option("--material", material, "Drude material spec");
    diagnose_cmd->add_option("--temp", a.temps, "temperature");
    add_output_options(diagnose_cmd, a.out);

    CLI::App* asym_cmd = app.add_subcommand("asymptotes", "closed-form regime values");
    add_engine(asym_cmd, false, false);

    CLI::App* real_cmd = app.add_subcommand(
        "pressure-real-axis", "real-frequency evaluation (Matsubara cross-check)");
    add_engine(real_cmd, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        error_line(2, std::string("argument error: ") + e.what());
        return 2;
    }

    try {
        if (scales_cmd->parsed()) return run_scales(a.temps, a.out);
        if (material_cmd->parsed()) return run_material(material, a.out);
        if (pressure_cmd->parsed()) return run_pointwise("pressure", a);
        if (free_cmd->parsed()) return run_pointwise("free-energy", a);
        if (entropy_cmd->parsed()) return run_pointwise("entropy", a);
        if (sweep_cmd->parsed()) return run_sweep(a, thermal_corr);
        if (spectrum_cmd->parsed()) return run_spectrum(a, omegas);
        if (map_cmd->parsed()) return run_map(a, omega_points, kappa_points);
        if (compare_cmd->parsed()) return run_compare(a, material);
        if (diagnose_cmd->parsed()) return run_diagnose(material, a.temps, a.out);
        if (asym_cmd->parsed()) return run_asymptotes(a);
        if (real_cmd->parsed()) return run_pressure_real_axis(a);
        error_line(2, "no subcommand given");
        return 2;
    } catch (const non_convergence_error& e) {
        error_line(3, e.what());
        return 3;
    } catch (const pole_error& e) {
        error_line(3, e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        error_line(2, e.what());
        return 2;
    } catch (const std::domain_error& e) {
        error_line(2, e.what());
        return 2;
    } catch (const std::exception& e) {
        error_line(2, e.what());
        return 2;
    }
}
