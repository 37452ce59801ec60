// pycasimir: python bindings for the parallel-plate dispersion force
// engine. Exposes the material models, reflection amplitudes, the
// Matsubara/zero-temperature thermodynamics, the real-axis diagnostics
// and the relaxation report.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace casimir;

PYBIND11_MODULE(pycasimir, m) {
    m.doc() = "Dispersion (Casimir) pressures, free energies and entropies between "
              "parallel plates for perfect-conductor, plasma and Drude models.";
    m.attr("__version__") = engine_version;

    // constants
    py::module_ consts = m.def_submodule("constants", "CODATA-2018 SI constants");
    consts.attr("hbar") = constants::hbar;
    consts.attr("k_B") = constants::k_B;
    consts.attr("c") = constants::c_light;
    consts.attr("eps0") = constants::eps0;
    consts.attr("mu0") = constants::mu0;
    consts.attr("eV") = constants::eV;
    consts.attr("zeta3") = constants::zeta3;
    consts.attr("version") = constants::version;

    // scales
    m.def("thermal_frequency", &thermal_frequency, py::arg("temperature_K"));
    m.def("thermal_wavelength", &thermal_wavelength, py::arg("temperature_K"));
    m.def("bose_occupation", &bose_occupation, py::arg("omega_rad_s"),
          py::arg("temperature_K"));

    // materials
    py::class_<MaterialModel>(m, "Material")
        .def_static("perfect_conductor", &MaterialModel::perfect_conductor)
        .def_static("vacuum", &MaterialModel::vacuum)
        .def_static("plasma", &MaterialModel::plasma, py::arg("omega_p_rad_s"))
        .def_static("drude", &MaterialModel::drude, py::arg("omega_p_rad_s"),
                    py::arg("tau_s"))
        .def_static("gold", &MaterialModel::gold)
        .def_static("from_json",
                    [](const std::string& text) {
                        return material_from_json(nlohmann::json::parse(text));
                    },
                    py::arg("json_text"))
        .def_property_readonly("name", &MaterialModel::name)
        .def_property_readonly("is_perfect_conductor",
                               &MaterialModel::is_perfect_conductor)
        .def_property_readonly("is_vacuum", &MaterialModel::is_vacuum)
        .def_property_readonly("is_plasma", &MaterialModel::is_plasma)
        .def_property_readonly("is_drude", &MaterialModel::is_drude)
        .def("omega_p", &MaterialModel::omega_p)
        .def("tau", &MaterialModel::tau)
        .def("__repr__",
             [](const MaterialModel& mm) { return "<Material '" + mm.name() + "'>"; });

    m.def("conductivity", &conductivity, py::arg("material"), py::arg("omega"));
    m.def("permittivity", &permittivity, py::arg("material"), py::arg("omega"));
    m.def("permittivity_imag_axis", &permittivity_imag_axis, py::arg("material"),
          py::arg("xi_rad_s"));
    m.def("dc_conductivity", &dc_conductivity, py::arg("material"));
    m.def("plasma_wavelength", &plasma_wavelength, py::arg("material"));
    m.def("magnetic_diffusivity", &magnetic_diffusivity, py::arg("material"));

    // fresnel
    py::enum_<Polarization>(m, "Polarization")
        .value("TE", Polarization::TE)
        .value("TM", Polarization::TM);
    m.def("axial_vacuum", &axial_vacuum, py::arg("omega_rad_s"), py::arg("k_par"));
    m.def("axial_medium", &axial_medium, py::arg("material"), py::arg("omega"),
          py::arg("k_par"));
    m.def("reflection_te", &reflection_te, py::arg("material"), py::arg("omega_rad_s"),
          py::arg("k_par"));
    m.def("reflection_tm", &reflection_tm, py::arg("material"), py::arg("omega_rad_s"),
          py::arg("k_par"));
    m.def("reflection", &reflection, py::arg("material"), py::arg("omega"),
          py::arg("k_par"), py::arg("pol"));
    m.def("reflection_imag_axis", &reflection_imag_axis, py::arg("material"),
          py::arg("xi_rad_s"), py::arg("k_par"), py::arg("pol"));
    m.def("surface_plasmon_frequency", &surface_plasmon_frequency, py::arg("material"),
          py::arg("k_par"));

    // lifshitz
    py::class_<PlateSystem>(m, "PlateSystem")
        .def(py::init<MaterialModel, MaterialModel, double>(), py::arg("material_1"),
             py::arg("material_2"), py::arg("gap_m"))
        .def_readonly("material_1", &PlateSystem::material_1)
        .def_readonly("material_2", &PlateSystem::material_2)
        .def_readonly("gap", &PlateSystem::gap);

    py::class_<QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init<>())
        .def_readwrite("k_nodes", &QuadratureConfig::k_nodes)
        .def_readwrite("matsubara_max", &QuadratureConfig::matsubara_max)
        .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
        .def_readwrite("temp_step_fraction", &QuadratureConfig::temp_step_fraction);

    py::class_<PolarizationSplit>(m, "PolarizationSplit")
        .def_readonly("te", &PolarizationSplit::te)
        .def_readonly("tm", &PolarizationSplit::tm)
        .def("total", &PolarizationSplit::total);

    py::class_<PressureBreakdown>(m, "PressureBreakdown")
        .def_readonly("total", &PressureBreakdown::total)
        .def_readonly("by_polarization", &PressureBreakdown::by_polarization)
        .def_readonly("n0", &PressureBreakdown::n0)
        .def_readonly("estimated_error", &PressureBreakdown::estimated_error)
        .def_readonly("matsubara_terms", &PressureBreakdown::matsubara_terms);

    py::class_<FreeEnergyResult>(m, "FreeEnergyResult")
        .def_readonly("value", &FreeEnergyResult::value)
        .def_readonly("by_polarization", &FreeEnergyResult::by_polarization)
        .def_readonly("n0", &FreeEnergyResult::n0)
        .def_readonly("estimated_error", &FreeEnergyResult::estimated_error)
        .def_readonly("matsubara_terms", &FreeEnergyResult::matsubara_terms);

    py::class_<EntropyResult>(m, "EntropyResult")
        .def_readonly("value", &EntropyResult::value)
        .def_readonly("coarse", &EntropyResult::coarse)
        .def_readonly("estimated_error", &EntropyResult::estimated_error);

    py::class_<ThermalCorrectionResult>(m, "ThermalCorrectionResult")
        .def_readonly("value", &ThermalCorrectionResult::value)
        .def_readonly("estimated_error", &ThermalCorrectionResult::estimated_error)
        .def_readonly("at_temperature", &ThermalCorrectionResult::at_temperature)
        .def_readonly("at_zero", &ThermalCorrectionResult::at_zero);

    py::enum_<Regime>(m, "Regime")
        .value("NonRetarded", Regime::NonRetarded)
        .value("Retarded", Regime::Retarded)
        .value("Thermal", Regime::Thermal);

    py::class_<AsymptoteResult>(m, "AsymptoteResult")
        .def_readonly("free_energy", &AsymptoteResult::free_energy)
        .def_readonly("pressure", &AsymptoteResult::pressure);

    py::class_<ModelComparison>(m, "ModelComparison")
        .def_readonly("drude", &ModelComparison::drude)
        .def_readonly("plasma", &ModelComparison::plasma)
        .def_readonly("difference", &ModelComparison::difference)
        .def_readonly("plasma_n0_te", &ModelComparison::plasma_n0_te);

    m.def("matsubara_xi", &matsubara_xi, py::arg("temperature_K"), py::arg("n"));
    m.def("free_energy_area", &free_energy_area, py::arg("system"),
          py::arg("temperature_K"), py::arg("config") = QuadratureConfig{});
    m.def("pressure", &pressure, py::arg("system"), py::arg("temperature_K"),
          py::arg("config") = QuadratureConfig{});
    m.def("free_energy_zero_temperature", &free_energy_zero_temperature,
          py::arg("system"), py::arg("config") = QuadratureConfig{});
    m.def("pressure_zero_temperature", &pressure_zero_temperature, py::arg("system"),
          py::arg("config") = QuadratureConfig{});
    m.def("entropy_area", &entropy_area, py::arg("system"), py::arg("temperature_K"),
          py::arg("config") = QuadratureConfig{});
    m.def("thermal_correction", &thermal_correction, py::arg("system"),
          py::arg("temperature_K"), py::arg("config") = QuadratureConfig{});
    m.def("asymptote", &asymptote, py::arg("regime"), py::arg("system"),
          py::arg("temperature_K"));
    m.def("compare_models", &compare_models, py::arg("gap_m"), py::arg("temperature_K"),
          py::arg("drude_material"), py::arg("config") = QuadratureConfig{});

    // spectral
    py::class_<RoundTrip>(m, "RoundTrip")
        .def_readonly("te", &RoundTrip::te)
        .def_readonly("tm", &RoundTrip::tm);

    py::class_<SpectralMap>(m, "SpectralMap")
        .def_readonly("omega_grid", &SpectralMap::omega_grid)
        .def_readonly("kappa_grid", &SpectralMap::kappa_grid)
        .def_readonly("te", &SpectralMap::te)
        .def_readonly("tm", &SpectralMap::tm)
        .def_readonly("sum", &SpectralMap::sum)
        .def_readonly("kappa_cutoff", &SpectralMap::kappa_cutoff)
        .def_readonly("diffusion_curve", &SpectralMap::diffusion_curve)
        .def_readonly("has_diffusion_curve", &SpectralMap::has_diffusion_curve)
        .def_readonly("cell_errors", &SpectralMap::cell_errors)
        .def_readonly("max_value", &SpectralMap::max_value)
        .def_readonly("argmax_omega", &SpectralMap::argmax_omega)
        .def_readonly("argmax_kappa", &SpectralMap::argmax_kappa);

    py::class_<SpectrumRecord>(m, "SpectrumRecord")
        .def_readonly("omega", &SpectrumRecord::omega)
        .def("total", &SpectrumRecord::total)
        .def("zero_point", &SpectrumRecord::zero_point)
        .def("thermal", &SpectrumRecord::thermal)
        .def("part",
             [](const SpectrumRecord& r, int weight, int pol, int sector) {
                 if (weight < 0 || weight > 1 || pol < 0 || pol > 1 || sector < 0 ||
                     sector > 1)
                     throw std::out_of_range("part indices are 0 or 1");
                 return r.part[weight][pol][sector];
             },
             py::arg("weight"), py::arg("pol"), py::arg("sector"),
             "indices: weight 0=zero-point/1=thermal, pol 0=TE/1=TM, "
             "sector 0=propagating/1=evanescent");

    m.def("roundtrip_factor", &roundtrip_factor, py::arg("system"),
          py::arg("omega_rad_s"), py::arg("k_z"));
    m.def("mode_density", &mode_density, py::arg("system"), py::arg("omega_rad_s"),
          py::arg("kappa_per_m"), py::arg("pol"));
    m.def("spectral_map",
          [](const PlateSystem& sys, const std::vector<double>& wg,
             const std::vector<double>& kg) { return spectral_map(sys, wg, kg); },
          py::arg("system"), py::arg("omega_grid"), py::arg("kappa_grid"));
    m.def("default_omega_grid", &default_omega_grid, py::arg("system"),
          py::arg("n") = 200);
    m.def("default_kappa_grid", &default_kappa_grid, py::arg("system"),
          py::arg("n") = 200);
    m.def("pressure_spectrum", &pressure_spectrum, py::arg("system"),
          py::arg("temperature_K"), py::arg("omega_rad_s"),
          py::arg("config") = QuadratureConfig{});
    m.def("pressure_real_axis", &pressure_real_axis, py::arg("system"),
          py::arg("temperature_K"), py::arg("config") = QuadratureConfig{});

    // relaxation
    py::class_<TelegraphistRoots>(m, "TelegraphistRoots")
        .def_readonly("slow", &TelegraphistRoots::slow)
        .def_readonly("fast", &TelegraphistRoots::fast)
        .def_readonly("underdamped", &TelegraphistRoots::underdamped);

    py::class_<RelaxationReport>(m, "RelaxationReport")
        .def_readonly("naive_rate", &RelaxationReport::naive_rate)
        .def_readonly("root_slow", &RelaxationReport::root_slow)
        .def_readonly("root_fast", &RelaxationReport::root_fast)
        .def_readonly("omega_slow", &RelaxationReport::omega_slow)
        .def_readonly("omega_fast", &RelaxationReport::omega_fast)
        .def_readonly("decay_rate", &RelaxationReport::decay_rate)
        .def_readonly("oscillation", &RelaxationReport::oscillation)
        .def_readonly("underdamped", &RelaxationReport::underdamped)
        .def_readonly("diffusivity", &RelaxationReport::diffusivity)
        .def_readonly("inv_2pi_tau_Hz", &RelaxationReport::inv_2pi_tau_Hz)
        .def_readonly("omega_T_over_2pi_Hz", &RelaxationReport::omega_T_over_2pi_Hz)
        .def("to_json", [](const RelaxationReport& r) { return to_json(r).dump(); });

    m.def("naive_relaxation_rate", &naive_relaxation_rate, py::arg("drude"));
    m.def("telegraphist_eigenfrequencies", &telegraphist_eigenfrequencies,
          py::arg("drude"));
    m.def("diffusion_eigenfrequency", &diffusion_eigenfrequency, py::arg("drude"),
          py::arg("k_per_m"));
    m.def("relaxation_report", &relaxation_report, py::arg("drude"),
          py::arg("temperature_K"));

    // units
    py::enum_<Quantity>(m, "Quantity")
        .value("Length", Quantity::Length)
        .value("Temperature", Quantity::Temperature)
        .value("Time", Quantity::Time)
        .value("PlasmaEnergy", Quantity::PlasmaEnergy)
        .value("Frequency", Quantity::Frequency);
    m.def("parse_quantity",
          [](const std::string& text, Quantity q) { return parse_quantity(text, q); },
          py::arg("text"), py::arg("kind"));

    // exception mapping
    py::register_exception<non_convergence_error>(m, "NonConvergenceError",
                                                  PyExc_RuntimeError);
    py::register_exception<pole_error>(m, "PoleError", PyExc_RuntimeError);
    py::register_exception<no_root_error>(m, "NoRootError", PyExc_RuntimeError);
    py::register_exception<unsupported_model_error>(m, "UnsupportedModelError",
                                                    PyExc_ValueError);
}
