#include <atomic>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthospin/appendix_checks.hpp"
#include "orthospin/branching.hpp"
#include "orthospin/brauer.hpp"
#include "orthospin/errors.hpp"
#include "orthospin/free_energy.hpp"
#include "orthospin/group_chars.hpp"
#include "orthospin/spectra.hpp"
#include "orthospin/tableaux.hpp"
#include "scan_io.hpp"

using nlohmann::json;
namespace os = orthospin;
using orthospin::cli::format_double;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNotProven = 3 };

struct RunConfig {
    int theta = 2;
    int n = 2;
    std::string mode = "L";
    double p1 = 0.0;
    double p2 = 0.0;
    double h = 0.0;
    std::string flavor;
    std::size_t cap = os::default_dense_cap();
    std::uint64_t seed = 0;
    bool oracle = false;
    int trials = 20;
    int samples = 0;
    int depth = 40;
    int resolution = 40;
    double j2_min = -1.5;
    double y1 = -1.0;
    unsigned threads = 0;
    std::vector<double> grid;
    std::string out;
    std::string svg;
    std::string from_csv;
};

os::ModelParams model_params(const RunConfig& c) {
    if (c.mode == "L") return os::CanonicalParams{c.p1, c.p2};
    if (c.mode == "K") return os::XxzParams{c.p1, c.p2};
    if (c.mode == "J") return os::BlbqParams{c.p1, c.p2};
    throw os::DomainError("param-mode must be L, K or J");
}

os::ConvertedParams converted(const RunConfig& c) {
    os::ConvertedParams p = os::convert_parameters(model_params(c), c.theta);
    if (c.flavor == "Q") p.flavor = os::Flavor::Q;
    else if (c.flavor == "P") p.flavor = os::Flavor::P;
    else if (!c.flavor.empty()) throw os::DomainError("flavor must be Q or P");
    return p;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw os::DomainError("cannot write " + path);
    f << text;
}

void emit_json(const json& j, const std::string& path = {}) { emit(j.dump(2) + "\n", path); }

json z_json(const RunConfig& c, const os::ConvertedParams& p, double z) {
    return json{{"schema", 1}, {"n", c.n},  {"theta", c.theta},
                {"L1", p.L1},  {"L2", p.L2}, {"h", c.h},
                {"Z", z},      {"log_Z_over_n", std::log(z) / c.n}};
}

int cmd_zexact(const RunConfig& c) {
    const auto p = converted(c);
    os::HamiltonianSpec spec;
    spec.theta = c.theta;
    spec.n = c.n;
    spec.L1 = p.L1;
    spec.L2 = p.L2;
    spec.h = c.h;
    spec.flavor = p.flavor;
    spec.dense_cap = c.cap;
    emit_json(z_json(c, p, os::z_direct(spec)), c.out);
    return kOk;
}

int cmd_zchar(const RunConfig& c) {
    const auto p = converted(c);
    emit_json(z_json(c, p, os::z_decomposed(c.n, c.theta, p.L1, p.L2, c.h)), c.out);
    return kOk;
}

os::PnOptions pn_options(const RunConfig& c) {
    os::PnOptions o;
    o.allow_oracle = c.oracle;
    o.dense_cap = c.cap;
    o.seed = c.seed;
    return o;
}

int cmd_spectrum(const RunConfig& c) {
    const auto p = converted(c);
    std::ostringstream csv;
    csv << "# schema: 1\nlambda,k,rho,eigenvalue,multiplicity\n";
    for (const auto& line : os::spectral_lines(c.n, c.theta, p.L1, p.L2, pn_options(c)))
        csv << '"' << line.lambda.to_string() << "\"," << line.k << ",\"" << line.rho.to_string() << "\","
            << format_double(line.eigenvalue) << ',' << line.multiplicity << '\n';
    emit(csv.str(), c.out);
    return kOk;
}

int cmd_branching(const RunConfig& c) {
    const auto p = converted(c);
    std::ostringstream csv;
    csv << "# schema: 1\nlambda,k,rho,b,d_O,d_Sn,eigenvalue\n";
    for (const auto& e : os::enumerate_Pn(c.n, c.theta, pn_options(c)))
        csv << '"' << e.pair.lambda.to_string() << "\"," << e.pair.k << ",\"" << e.pair.rho.to_string() << "\","
            << e.b << ',' << os::dim_o(e.pair.lambda, c.theta) << ',' << os::dim_sn(e.pair.rho) << ','
            << format_double(os::line_eigenvalue(e.pair, c.theta, p.L1, p.L2)) << '\n';
    emit(csv.str(), c.out);
    return kOk;
}

json maximizers_json(const os::MaximizeResult& m) {
    json arr = json::array();
    for (const auto& mx : m.maximizers)
        arr.push_back({{"x", mx.point.x}, {"y1_lo", mx.y1_lo}, {"y1_hi", mx.y1_hi}, {"value", mx.value}});
    return arr;
}

int cmd_free_energy(const RunConfig& c) {
    const auto p = converted(c);
    const os::MaximizeResult m = os::maximize_phi(c.theta, p.L1, p.L2, c.h);
    json j{{"schema", 1},       {"theta", c.theta},
           {"param_mode", c.mode}, {"p1", c.p1},
           {"p2", c.p2},        {"L1", p.L1},
           {"L2", p.L2},        {"h", c.h},
           {"shift", p.constant_shift}, {"value", m.value},
           {"model_value", m.value - p.constant_shift / 2}, {"maximizers", maximizers_json(m)}};
    if (c.theta == 2 || c.theta == 3) j["phase"] = os::to_string(os::classify_phase(c.theta, model_params(c)).phase);
    emit_json(j, c.out);
    return kOk;
}

std::vector<os::cli::ScanRow> run_scan(const RunConfig& c) {
    if (c.grid.size() != 6) throw os::DomainError("grid needs p1_lo p1_hi p1_steps p2_lo p2_hi p2_steps");
    const int n1 = static_cast<int>(c.grid[2]), n2 = static_cast<int>(c.grid[5]);
    if (n1 < 1 || n2 < 1) throw os::DomainError("grid steps must be positive");
    auto at = [](double lo, double hi, int steps, int i) { return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1); };

    std::vector<os::cli::ScanRow> rows(static_cast<std::size_t>(n1) * n2);
    for (int j = 0; j < n2; ++j)
        for (int i = 0; i < n1; ++i) {
            auto& r = rows[static_cast<std::size_t>(j) * n1 + i];
            r.p1 = at(c.grid[0], c.grid[1], n1, i);
            r.p2 = at(c.grid[3], c.grid[4], n2, j);
        }

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (std::size_t k = next++; k < rows.size(); k = next++) {
            auto& r = rows[k];
            RunConfig pc = c;
            pc.p1 = r.p1;
            pc.p2 = r.p2;
            try {
                const os::PhaseResult ph = os::classify_phase(c.theta, model_params(pc));
                const auto& best = ph.max.maximizers.front();
                r.phase = os::to_string(ph.phase);
                r.x = best.point.x;
                r.y1 = best.y1_hi;
                r.value = ph.max.value;
            } catch (const os::NotProven&) {
                r.phase = "not_proven";
                r.x.assign(static_cast<std::size_t>(c.theta), NAN);
                r.y1 = NAN;
                r.value = NAN;
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned count = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw os::DomainError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int cmd_phase_scan(const RunConfig& c) {
    std::vector<os::cli::ScanRow> rows;
    if (!c.from_csv.empty()) {
        rows = os::cli::parse_scan_csv(read_file(c.from_csv));
    } else {
        rows = run_scan(c);
        emit(os::cli::write_scan_csv(rows), c.out);
    }
    if (!c.svg.empty()) emit(os::cli::render_scan_svg(rows), c.svg);
    return kOk;
}

int cmd_magnetization(const RunConfig& c) {
    const auto p = converted(c);
    const double step = c.h != 0.0 ? c.h : 1e-6;
    const os::OneSided d = os::one_sided_derivatives(c.theta, p.L1, p.L2);
    const double phi0 = os::field_free_energy(c.theta, p.L1, p.L2, 0.0);
    const double phih = os::field_free_energy(c.theta, p.L1, p.L2, step);
    emit_json({{"schema", 1},
               {"theta", c.theta},
               {"L1", p.L1},
               {"L2", p.L2},
               {"y1_up", d.y1_up},
               {"y1_down", d.y1_down},
               {"h", step},
               {"Phi_0", phi0},
               {"Phi_h", phih},
               {"difference_quotient", (phih - phi0) / step}},
              c.out);
    return kOk;
}

int cmd_total_spin(const RunConfig& c) {
    const auto p = converted(c);
    json j{{"schema", 1}, {"n", c.n}, {"theta", c.theta}, {"L1", p.L1}, {"L2", p.L2}, {"h", c.h}};
    const os::TotalSpin t = os::total_spin_observable(c.n, c.theta, p.L1, p.L2, c.h, c.cap);
    j["dense"] = t.dense;
    j["characters"] = t.characters;
    if (c.y1 >= 0.0) j["limit"] = os::total_spin_limit(c.theta, c.h, c.y1);
    emit_json(j, c.out);
    return kOk;
}

int cmd_curve_c(const RunConfig& c) {
    std::ostringstream csv;
    csv << "# schema: 1\nJ1,J2\n";
    for (const auto& [j1, j2] : os::trace_curve_C(c.resolution, c.j2_min))
        csv << format_double(j1) << ',' << format_double(j2) << '\n';
    emit(csv.str(), c.out);
    return kOk;
}

int cmd_verify_schur_weyl(const RunConfig& c) {
    os::BigInt total = 0;
    for (const auto& e : os::enumerate_Pn(c.n, c.theta, pn_options(c)))
        total += os::dim_o(e.pair.lambda, c.theta) * os::dim_sn(e.pair.rho) * e.b;
    os::BigInt expected = 1;
    for (int i = 0; i < c.n; ++i) expected *= c.theta;
    const bool ok = total == expected;
    emit_json({{"schema", 1},
               {"theta", c.theta},
               {"n", c.n},
               {"multiplicity_sum", total.str()},
               {"expected", expected.str()},
               {"passed", ok}},
              c.out);
    return ok ? kOk : kVerifyFailed;
}

int cmd_verify_homomorphism(const RunConfig& c) {
    const os::Flavor f = c.flavor == "P" ? os::Flavor::P : os::Flavor::Q;
    const auto r = os::verify_homomorphism(c.n, c.theta, static_cast<std::size_t>(c.samples), f, c.seed);
    json j{{"schema", 1},
           {"theta", c.theta},
           {"n", c.n},
           {"flavor", f == os::Flavor::P ? "P" : "Q"},
           {"pairs_checked", r.pairs_checked},
           {"max_residual", r.max_residual},
           {"passed", r.passed}};
    if (r.first_failure)
        j["first_failure"] = {r.first_failure->first.to_string(), r.first_failure->second.to_string()};
    emit_json(j, c.out);
    return r.passed ? kOk : kVerifyFailed;
}

int cmd_verify_appendix_a(const RunConfig& c) {
    const auto cert = os::certify_positive(os::kCertifyLo, os::kCertifyHi, c.depth);
    const auto wind = os::winding_zero_count({1.0, 0.0}, 1.0 / 16, 0.15, 91);
    const auto root = os::inner_denominator_root();
    json j{{"schema", 1},
           {"certified", cert.certified},
           {"leaves", cert.leaves},
           {"max_depth", cert.max_depth},
           {"winding_estimate", {wind.estimate.real(), wind.estimate.imag()}},
           {"root_enclosure", {root.lo(), root.hi()}}};
    j["winding"] = wind.verified ? json(*wind.verified) : json(nullptr);
    if (cert.witness) j["witness"] = {cert.witness->lo(), cert.witness->hi()};
    emit_json(j, c.out);
    return cert.certified && wind.verified == 4 ? kOk : kVerifyFailed;
}

int cmd_verify_unitary(const RunConfig& c) {
    const auto r = os::verify_pq_equivalence(c.theta, c.n);
    json j{{"schema", 1}, {"theta", c.theta}, {"obstructed", r.obstructed}, {"symmetry_defect", r.symmetry_defect}};
    if (!r.obstructed) {
        j["n"] = c.n;
        j["psi_residual"] = r.psi_residual;
        j["conjugation_residual"] = r.conjugation_residual;
        j["spectrum_residual"] = r.spectrum_residual;
    }
    emit_json(j, c.out);
    if (r.obstructed) return r.symmetry_defect > 0 ? kOk : kVerifyFailed;
    const bool ok = r.psi_residual <= 1e-12 && r.conjugation_residual <= 1e-12 && r.spectrum_residual <= 1e-10;
    return ok ? kOk : kVerifyFailed;
}

int cmd_verify_oracle(const RunConfig& c) {
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    double worst = 0.0;
    for (int t = 0; t < c.trials; ++t) {
        os::HamiltonianSpec spec;
        spec.theta = c.theta;
        spec.n = c.n;
        spec.L1 = dist(rng);
        spec.L2 = dist(rng);
        spec.h = c.h;
        spec.dense_cap = c.cap;
        const double zd = os::z_direct(spec);
        const double zc = os::z_decomposed(c.n, c.theta, spec.L1, spec.L2, c.h);
        worst = std::max(worst, std::abs(zd - zc) / zd);
    }
    const bool ok = worst <= 1e-9;
    emit_json({{"schema", 1},
               {"theta", c.theta},
               {"n", c.n},
               {"trials", c.trials},
               {"h", c.h},
               {"max_relative_error", worst},
               {"passed", ok}},
              c.out);
    return ok ? kOk : kVerifyFailed;
}

void add_model_options(CLI::App* app, RunConfig& c) {
    app->add_option("--theta", c.theta, "local dimension")->required();
    app->add_option("--param-mode", c.mode, "L (canonical), K (XXZ) or J (bilinear-biquadratic)")
        ->check(CLI::IsMember({"L", "K", "J"}));
    app->add_option("--p1", c.p1, "first parameter (L1, K1 or J1)");
    app->add_option("--p2", c.p2, "second parameter (L2, K2 or J2)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthospin: spectra and free energies of O(theta)-invariant spin models on the complete graph"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    RunConfig c;
    if (const char* env = std::getenv("ORTHO_SPIN_DENSE_CAP")) c.cap = std::stoull(env);
    std::function<int()> action;

    auto add = [&](const std::string& name, const std::string& help, std::function<int(const RunConfig&)> fn,
                   CLI::App* parent = nullptr) {
        CLI::App* sub = (parent ? parent : &app)->add_subcommand(name, help);
        sub->set_help_flag("--help", "print this help and exit");
        sub->callback([&action, &c, fn] { action = [&c, fn] { return fn(c); }; });
        sub->add_option("--out", c.out, "output file (stdout when omitted)");
        sub->add_option("--seed", c.seed, "random seed")->default_val(0);
        return sub;
    };

    auto* zexact = add("zexact", "partition function by dense diagonalisation", cmd_zexact);
    add_model_options(zexact, c);
    zexact->add_option("--n", c.n, "number of sites")->required();
    zexact->add_option("--h", c.h, "field strength");
    zexact->add_option("--flavor", c.flavor, "Q or P")->check(CLI::IsMember({"Q", "P"}));

    auto* zchar = add("zchar", "partition function from the representation-theoretic decomposition", cmd_zchar);
    add_model_options(zchar, c);
    zchar->add_option("--n", c.n, "number of sites")->required();
    zchar->add_option("--h", c.h, "field strength");

    auto* spectrum = add("spectrum", "eigenvalue lines with multiplicities (CSV)", cmd_spectrum);
    add_model_options(spectrum, c);
    spectrum->add_option("--n", c.n, "number of sites")->required();
    spectrum->add_flag("--oracle", c.oracle, "fill unknown branching values by spectral extraction");

    auto* branching = add("branching", "positive branching coefficients (CSV)", cmd_branching);
    add_model_options(branching, c);
    branching->add_option("--n", c.n, "number of sites")->required();
    branching->add_flag("--oracle", c.oracle, "fill unknown branching values by spectral extraction");

    auto* fe = add("free-energy", "variational free energy and maximisers", cmd_free_energy);
    add_model_options(fe, c);
    fe->add_option("--h", c.h, "field strength");

    auto* scan = add("phase-scan", "phase labels over a parameter grid (CSV, optional SVG)", cmd_phase_scan);
    scan->add_option("--theta", c.theta, "local dimension");
    scan->add_option("--param-mode", c.mode, "L, K or J")->check(CLI::IsMember({"L", "K", "J"}));
    scan->add_option("--grid", c.grid, "p1_lo p1_hi p1_steps p2_lo p2_hi p2_steps")->expected(6);
    scan->add_option("--svg", c.svg, "also write a region map");
    scan->add_option("--from-csv", c.from_csv, "render the SVG from an existing scan CSV");
    scan->add_option("--threads", c.threads, "worker threads (0 = hardware)");

    auto* mag = add("magnetization", "one-sided field derivatives at h = 0", cmd_magnetization);
    add_model_options(mag, c);
    mag->add_option("--h", c.h, "finite-difference step (default 1e-6)");

    auto* ts = add("total-spin", "finite-n total spin expectation", cmd_total_spin);
    add_model_options(ts, c);
    ts->add_option("--n", c.n, "number of sites")->required();
    ts->add_option("--h", c.h, "field strength");
    ts->add_option("--y1", c.y1, "also report the large-n limit at this y1");

    auto* curve = add("curve-c", "spin-1 disordered-region boundary for J1 >= J2 (CSV)", cmd_curve_c);
    curve->add_option("--resolution", c.resolution, "number of points")->check(CLI::Range(10, 100000));
    curve->add_option("--j2-min", c.j2_min, "lowest J2 sample");

    CLI::App* verify = app.add_subcommand("verify", "self-checks");
    verify->set_help_flag("--help", "print this help and exit");
    verify->require_subcommand(1);
    auto* sw = add("schur-weyl", "multiplicities sum to theta^n", cmd_verify_schur_weyl, verify);
    sw->add_option("--theta", c.theta)->required();
    sw->add_option("--n", c.n)->required();
    sw->add_flag("--oracle", c.oracle);
    auto* hom = add("homomorphism", "diagram products agree with operator products", cmd_verify_homomorphism, verify);
    hom->add_option("--theta", c.theta)->required();
    hom->add_option("--n", c.n)->required();
    hom->add_option("--samples", c.samples, "random pairs (0 = all pairs)");
    hom->add_option("--flavor", c.flavor, "Q or P")->check(CLI::IsMember({"Q", "P"}));
    auto* apa = add("appendix-a", "positivity certificate and zero count", cmd_verify_appendix_a, verify);
    apa->add_option("--depth", c.depth, "maximum bisection depth");
    auto* uni = add("unitary", "explicit Q/P intertwiner", cmd_verify_unitary, verify);
    uni->add_option("--theta", c.theta)->required();
    uni->add_option("--n", c.n, "sites for the spectrum comparison")->default_val(4);
    auto* orc = add("oracle", "dense trace against the decomposition", cmd_verify_oracle, verify);
    orc->add_option("--theta", c.theta)->required();
    orc->add_option("--n", c.n)->required();
    orc->add_option("--trials", c.trials);
    orc->add_option("--h", c.h);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    try {
        return action ? action() : kUsage;
    } catch (const os::NotProven& e) {
        std::cerr << "not proven: " << e.what() << '\n';
        return kNotProven;
    } catch (const os::Unresolved& e) {
        std::cerr << "unresolved: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const os::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const os::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
