// sdlab: zero-dilation indices, KMS/companion structure, numerical-range
// geometry. Subcommands map one-to-one onto the library modules; `verify`
// replays the full check suites with a seeded corpus.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sdlab/companion.hpp"
#include "sdlab/config.hpp"
#include "sdlab/dilation.hpp"
#include "sdlab/errors.hpp"
#include "sdlab/io.hpp"
#include "sdlab/kms.hpp"
#include "sdlab/linalg.hpp"
#include "sdlab/numrange.hpp"
#include "sdlab/random.hpp"
#include "sdlab/verify.hpp"

namespace {

using namespace sdlab;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitHypothesis = 4;
constexpr int kExitIo = 5;

std::uint64_t env_seed_default() {
    if (const char* env = std::getenv("SDLAB_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 42;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fmt(Complex z) {
    return "(" + fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i)";
}

int cmd_zdi(const std::string& path, const RunConfig& cfg) {
    const ComplexMatrix a = io::load_matrix(path);
    const dilation::ZdiResult r =
        cfg.tol > 0.0 ? dilation::zdi(a, cfg.grid_size, cfg.tol * (1.0 + a.frobenius_norm()))
                      : dilation::zdi(a, cfg.grid_size);
    std::cout << "d = " << r.index << "\n";
    std::cout << "argmin theta = " << fmt(r.argmin_theta) << "\n";
    int lo = r.profile.front().second, hi = lo;
    for (const auto& [theta, count] : r.profile) {
        lo = std::min(lo, count);
        hi = std::max(hi, count);
    }
    std::cout << "profile: i>=0 ranges over [" << lo << ", " << hi << "] on a " << r.grid_size
              << "-point grid" << (r.refined ? " (refined)" : "") << "\n";
    return 0;
}

int cmd_companion_build(const std::string& spec_path, const std::string& out_path) {
    const auto spec = io::load_companion_spec(spec_path);
    const ComplexMatrix c = companion::build(spec);
    if (out_path.empty()) {
        std::cout << io::write_matrix(c);
    } else {
        io::save_matrix(out_path, c);
        std::cout << "wrote " << out_path << " (" << c.rows() << "x" << c.cols() << ")\n";
    }
    return 0;
}

int cmd_companion_det(const std::string& spec_path, int samples) {
    const auto spec = io::load_companion_spec(spec_path);
    const ComplexMatrix c = companion::build(spec);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const double phi = 2.0 * M_PI * double(s) / double(samples);
        const Complex omega{std::cos(phi), std::sin(phi)};
        const double closed = companion::det_re_closed_form(spec, omega);
        const Complex direct = determinant(re_part(omega * c));
        const double denom = std::max({std::abs(closed), std::abs(direct), 1e-30});
        const double rel = std::abs(closed - direct) / denom;
        worst = std::max(worst, rel);
        std::cout << "omega = " << fmt(omega) << ": closed " << fmt(closed) << ", direct "
                  << fmt(direct.real()) << ", rel err " << fmt(rel) << "\n";
    }
    std::cout << "max rel err = " << fmt(worst) << "\n";
    return worst <= 1e-9 ? 0 : kExitVerifyFailure;
}

int cmd_companion_bounds(const std::string& spec_path, const RunConfig& cfg) {
    const auto spec = io::load_companion_spec(spec_path);
    const companion::ZdiBounds b = companion::zdi_bounds(spec);
    const int got = dilation::zdi(companion::build(spec), cfg.grid_size).index;
    if (b.exact) {
        const bool agree = got == *b.exact;
        std::cout << "exact d = " << *b.exact << ", oracle "
                  << (agree ? "agrees" : ("disagrees (" + std::to_string(got) + ")")) << "\n";
        return agree ? 0 : kExitVerifyFailure;
    }
    const bool within = b.lower <= got && got <= b.upper;
    std::cout << "bounds [" << b.lower << ", " << b.upper << "], oracle " << got
              << (within ? " within bounds" : " OUTSIDE bounds") << "\n";
    return within ? 0 : kExitVerifyFailure;
}

int cmd_companion_interp(std::size_t m, std::size_t n, std::size_t k, const RunConfig& cfg,
                         const std::string& out_path) {
    const auto spec = companion::build_interp_example(m, n, k);
    if (!out_path.empty()) io::write_file(out_path, io::write_companion_spec(spec));
    const int expected = int((m - 1) * n / 2 + k);
    const int got = dilation::zdi(companion::build(spec), cfg.grid_size).index;
    std::cout << "expected " << expected << ", oracle " << got << "\n";
    return expected == got ? 0 : kExitVerifyFailure;
}

int cmd_kms_build(std::size_t m, const std::string& matrix_path, const std::string& out_path) {
    const kms::KmsSpec spec{m, io::load_matrix(matrix_path)};
    const ComplexMatrix k = kms::build(spec);
    if (out_path.empty()) {
        std::cout << io::write_matrix(k);
    } else {
        io::save_matrix(out_path, k);
        std::cout << "wrote " << out_path << " (" << k.rows() << "x" << k.cols() << ")\n";
    }
    return 0;
}

int cmd_kms_zdi(std::size_t m, const std::string& matrix_path, const RunConfig& cfg,
                bool run_oracle) {
    const ComplexMatrix a = io::load_matrix(matrix_path);
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;
    const int d = (m == 2) ? kms::zdi_kms2(a, tol) : kms::zdi_kms(m, a, tol);
    std::cout << "d = " << d << (m == 2 ? " (n + nullity formula)" : " (i>=0 of Re K_m(A))")
              << "\n";
    if (run_oracle) {
        const int got = dilation::zdi(kms::build({m, a}), cfg.grid_size).index;
        std::cout << "grid oracle = " << got << (got == d ? " (agrees)" : " (DISAGREES)") << "\n";
        return got == d ? 0 : kExitVerifyFailure;
    }
    return 0;
}

void warn_if_unstable(const ComplexMatrix& a, double tol) {
    if (!kms::segre_at_zero(a, tol).stable)
        std::cerr << "warning: a rank decision sits within a factor 10 of the tolerance; "
                     "Jordan-structure counts may be unreliable\n";
}

int cmd_kms_nk(std::size_t m, const std::string& matrix_path, const RunConfig& cfg) {
    const ComplexMatrix a = io::load_matrix(matrix_path);
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;
    warn_if_unstable(a, tol);
    const kms::NkCounts counts = kms::nk_formula(m, a, tol);
    std::cout << "N = [";
    for (std::size_t i = 0; i < counts.counts.size(); ++i)
        std::cout << (i ? ", " : "") << counts.counts[i];
    std::cout << "]\n";
    return 0;
}

int cmd_kms_similar(std::size_t m, const std::string& a_path, const std::string& b_path,
                    const RunConfig& cfg) {
    const ComplexMatrix a = io::load_matrix(a_path);
    const ComplexMatrix b = io::load_matrix(b_path);
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;
    warn_if_unstable(a, tol);
    warn_if_unstable(b, tol);
    const kms::NkCounts na = kms::nk_formula(m, a, tol);
    const kms::NkCounts nb = kms::nk_formula(m, b, tol);
    if (na == nb) {
        std::cout << "similar\n";
    } else {
        for (std::size_t k = na.counts.size(); k-- > 0;) {
            if (na.counts[k] != nb.counts[k]) {
                std::cout << "not similar (N_" << k + 1 << ": " << na.counts[k] << " vs "
                          << nb.counts[k] << ")\n";
                break;
            }
        }
    }
    return 0;
}

int cmd_kms_usim(std::size_t m, const std::string& a_path, const std::string& b_path,
                 const RunConfig& cfg) {
    const ComplexMatrix a = io::load_matrix(a_path);
    const ComplexMatrix b = io::load_matrix(b_path);
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;
    const kms::UsimVerdict v = kms::kms_unitarily_similar_upto(m, a, b, cfg.max_word_degree, tol);
    if (v.distinguished) {
        std::cout << "distinguished by word " << v.word.str() << " (tr " << fmt(v.trace_a)
                  << " vs " << fmt(v.trace_b) << ")\n";
    } else {
        std::cout << "indistinguishable up to degree " << v.max_degree
                  << " (not a proof of unitary similarity)\n";
    }
    return 0;
}

int cmd_numrange(const std::string& path, const RunConfig& cfg, const std::string& out_prefix) {
    const std::string text = io::read_file(path);
    ComplexMatrix a;
    bool is_kms = false;
    kms::KmsSpec spec;
    if (io::looks_like_kms_spec(text)) {
        spec = io::parse_kms_spec(text);
        a = kms::build(spec);
        is_kms = true;
    } else {
        a = io::parse_matrix(text);
    }

    const auto samples = numrange::boundary(a, cfg.boundary_samples);
    const std::string prefix = out_prefix.empty() ? "numrange" : out_prefix;
    io::write_file(prefix + ".csv", io::boundary_csv(samples));
    io::write_file(prefix + ".svg", io::boundary_svg(samples));
    std::cout << "wrote " << prefix << ".csv, " << prefix << ".svg (" << samples.size()
              << " samples)\n";

    if (is_kms) {
        const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;
        const auto v = numrange::circularity(spec, cfg.boundary_samples, tol);
        if (v.circular)
            std::cout << "circularity: CircularDisk(radius " << fmt(v.radius) << ")\n";
        else
            std::cout << "circularity: NotCircular(max deviation " << fmt(v.max_deviation)
                      << ")\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, const std::string& out_path,
               bool inject_singular) {
    const verify::SuiteReport report = verify::run_suite(suite, cfg, inject_singular);
    std::cout << verify::report_text(report);
    if (!out_path.empty()) io::write_file(out_path, verify::report_json(report));
    return report.passed() ? 0 : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-dilation indices and numerical ranges of structured block matrices"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.seed = env_seed_default();

    // zdi
    std::string zdi_path;
    auto* zdi_cmd = app.add_subcommand("zdi", "grid-minimized zero-dilation index of a matrix");
    zdi_cmd->add_option("matrix", zdi_path, "matrix JSON file")->required();
    zdi_cmd->add_option("--grid", cfg.grid_size, "theta grid size");
    zdi_cmd->add_option("--tol", cfg.tol, "relative tolerance override");

    // companion
    auto* comp = app.add_subcommand("companion", "generalized companion matrices");
    comp->require_subcommand(1);
    std::string comp_spec_path, comp_out;
    std::size_t interp_m = 3, interp_n = 1, interp_k = 0;
    int det_samples = 8;

    auto* comp_build = comp->add_subcommand("build", "assemble the matrix from a spec");
    comp_build->add_option("spec", comp_spec_path, "companion spec JSON")->required();
    comp_build->add_option("--out", comp_out, "output matrix file");

    auto* comp_det = comp->add_subcommand("det", "closed-form vs direct determinant of Re(omega C)");
    comp_det->add_option("spec", comp_spec_path, "companion spec JSON")->required();
    comp_det->add_option("--samples", det_samples, "number of omega samples");

    auto* comp_bounds = comp->add_subcommand("bounds", "zero-dilation bounds with oracle check");
    comp_bounds->add_option("spec", comp_spec_path, "companion spec JSON")->required();
    comp_bounds->add_option("--grid", cfg.grid_size, "theta grid size");

    auto* comp_interp = comp->add_subcommand("interp", "interpolating example with verified index");
    comp_interp->add_option("--m", interp_m, "odd block count")->required();
    comp_interp->add_option("--n", interp_n, "block size")->required();
    comp_interp->add_option("--k", interp_k, "index offset in [0, n]")->required();
    comp_interp->add_option("--grid", cfg.grid_size, "theta grid size");
    comp_interp->add_option("--out", comp_out, "write the spec JSON here");

    // kms
    auto* kms_cmd = app.add_subcommand("kms", "block KMS matrices");
    kms_cmd->require_subcommand(1);
    std::size_t kms_m = 3;
    std::string kms_a_path, kms_b_path, kms_out;
    bool kms_oracle = false;

    auto* kms_build_cmd = kms_cmd->add_subcommand("build", "assemble K_m(A)");
    kms_build_cmd->add_option("--m", kms_m, "block count")->required();
    kms_build_cmd->add_option("matrix", kms_a_path, "matrix A JSON")->required();
    kms_build_cmd->add_option("--out", kms_out, "output matrix file");

    auto* kms_zdi_cmd = kms_cmd->add_subcommand("zdi", "zero-dilation index of K_m(A)");
    kms_zdi_cmd->add_option("--m", kms_m, "block count")->required();
    kms_zdi_cmd->add_option("matrix", kms_a_path, "matrix A JSON")->required();
    kms_zdi_cmd->add_flag("--oracle", kms_oracle, "cross-check against the grid oracle");
    kms_zdi_cmd->add_option("--grid", cfg.grid_size, "theta grid size");
    kms_zdi_cmd->add_option("--tol", cfg.tol, "tolerance override");

    auto* kms_nk_cmd = kms_cmd->add_subcommand("nk", "Jordan block counts of J_m(0) (x) A");
    kms_nk_cmd->add_option("--m", kms_m, "block count")->required();
    kms_nk_cmd->add_option("matrix", kms_a_path, "matrix A JSON")->required();
    kms_nk_cmd->add_option("--tol", cfg.tol, "rank tolerance override");

    auto* kms_sim_cmd = kms_cmd->add_subcommand("similar", "similarity of K_m(A) and K_m(B)");
    kms_sim_cmd->add_option("--m", kms_m, "block count")->required();
    kms_sim_cmd->add_option("a", kms_a_path, "matrix A JSON")->required();
    kms_sim_cmd->add_option("b", kms_b_path, "matrix B JSON")->required();
    kms_sim_cmd->add_option("--tol", cfg.tol, "rank tolerance override");

    auto* kms_usim_cmd =
        kms_cmd->add_subcommand("usim", "truncated Specht unitary-similarity comparison");
    kms_usim_cmd->add_option("--m", kms_m, "block count")->required();
    kms_usim_cmd->add_option("a", kms_a_path, "matrix A JSON")->required();
    kms_usim_cmd->add_option("b", kms_b_path, "matrix B JSON")->required();
    kms_usim_cmd->add_option("--max-degree", cfg.max_word_degree, "word degree cap");
    kms_usim_cmd->add_option("--tol", cfg.tol, "trace comparison tolerance");

    // numrange
    std::string nr_path, nr_out;
    auto* nr_cmd = app.add_subcommand("numrange", "numerical-range boundary to CSV and SVG");
    nr_cmd->add_option("input", nr_path, "matrix JSON or KMS spec JSON")->required();
    nr_cmd->add_option("--out", nr_out, "output path prefix (default 'numrange')");
    nr_cmd->add_option("--samples", cfg.boundary_samples, "boundary sample count");
    nr_cmd->add_option("--tol", cfg.tol, "circularity tolerance override");

    // verify
    std::string suite = "all", verify_out;
    bool inject_singular = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance check suites");
    verify_cmd->add_option("suite", suite, "companion | kms | numrange | all");
    verify_cmd->add_option("--seed", cfg.seed, "corpus seed (also env SDLAB_SEED)");
    verify_cmd->add_option("--grid", cfg.grid_size, "theta grid size");
    verify_cmd->add_option("--tol", cfg.tol, "tolerance override");
    verify_cmd->add_option("--max-degree", cfg.max_word_degree, "Specht degree cap");
    verify_cmd->add_option("--samples", cfg.boundary_samples, "boundary sample count");
    verify_cmd->add_option("--out", verify_out, "write the JSON report here");
    verify_cmd->add_flag("--inject-singular", inject_singular,
                         "plant a singular-A_j fixture; its rejection must surface as exit 1");

    CLI11_PARSE(app, argc, argv);

    try {
        if (zdi_cmd->parsed()) return cmd_zdi(zdi_path, cfg);
        if (comp->parsed()) {
            if (comp_build->parsed()) return cmd_companion_build(comp_spec_path, comp_out);
            if (comp_det->parsed()) return cmd_companion_det(comp_spec_path, det_samples);
            if (comp_bounds->parsed()) return cmd_companion_bounds(comp_spec_path, cfg);
            if (comp_interp->parsed())
                return cmd_companion_interp(interp_m, interp_n, interp_k, cfg, comp_out);
        }
        if (kms_cmd->parsed()) {
            if (kms_build_cmd->parsed()) return cmd_kms_build(kms_m, kms_a_path, kms_out);
            if (kms_zdi_cmd->parsed()) return cmd_kms_zdi(kms_m, kms_a_path, cfg, kms_oracle);
            if (kms_nk_cmd->parsed()) return cmd_kms_nk(kms_m, kms_a_path, cfg);
            if (kms_sim_cmd->parsed()) return cmd_kms_similar(kms_m, kms_a_path, kms_b_path, cfg);
            if (kms_usim_cmd->parsed()) return cmd_kms_usim(kms_m, kms_a_path, kms_b_path, cfg);
        }
        if (nr_cmd->parsed()) return cmd_numrange(nr_path, cfg, nr_out);
        if (verify_cmd->parsed()) return cmd_verify(suite, cfg, verify_out, inject_singular);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return 0;
}
