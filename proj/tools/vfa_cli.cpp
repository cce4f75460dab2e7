#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "vfa/csv.hpp"
#include "vfa/decode.hpp"
#include "vfa/density.hpp"
#include "vfa/dft.hpp"
#include "vfa/image.hpp"
#include "vfa/regression.hpp"
#include "vfa/selftest.hpp"
#include "vfa/shaping.hpp"

using namespace vfa;

namespace {

constexpr double kPi = std::numbers::pi;

Family parse_family(const std::string& s) {
    if (s == "lcc") return Family::block;
    return family_from_name(s);
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    auto dot = path.rfind('.');
    if (dot == std::string::npos) return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + v[i];
    return out;
}

template <typename T>
std::string join_num(const std::vector<T>& v) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
    return ss.str();
}

void common_header(CsvWriter& csv, std::uint64_t seed) {
    csv.comment("version", kLibraryVersion);
    csv.comment_val("seed", seed);
}

// ---- kernel ---------------------------------------------------------------

struct KernelArgs {
    std::vector<std::string> dists{"uniform"};
    std::vector<std::string> families{"hadamard"};
    std::vector<std::size_t> n_list{1024};
    std::size_t blocks = 32;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    double d_max = 5.0, d_step = 0.05;
    std::string out = "kernel.csv";
};

int cmd_kernel(const KernelArgs& a) {
    auto grid = linspace(-a.d_max, a.d_max, a.d_step);
    CsvWriter csv(a.out);
    CsvWriter rmse_csv(with_suffix(a.out, "_rmse"));
    for (CsvWriter* c : {&csv, &rmse_csv}) {
        common_header(*c, a.seed);
        c->comment("dist", join(a.dists));
        c->comment("family", join(a.families));
        c->comment("n", join_num(a.n_list));
        c->comment_val("blocks", a.blocks);
        c->comment_val("trials", a.trials);
        c->comment_val("d_max", a.d_max);
        c->comment_val("d_step", a.d_step);
    }
    csv.header({"dist", "family", "n", "d", "mean", "std", "imag_mean"});
    rmse_csv.header({"dist", "family", "n", "rmse"});
    std::uint64_t cell = 0;
    for (const auto& ds : a.dists)
        for (const auto& fs : a.families)
            for (std::size_t n : a.n_list) {
                Family fam = parse_family(fs);
                PhaseDistribution dist = PhaseDistribution::parse(ds);
                FpeEncoder enc = FpeEncoder::sample_base(
                    dist, fam, n, a.seed + cell,
                    fam == Family::block ? a.blocks : 0);
                KernelEstimate est =
                    estimate_kernel(enc, grid, a.trials, a.seed ^ (++cell));
                for (std::size_t i = 0; i < grid.size(); ++i)
                    csv.row(ds, fs, n, grid[i], est.mean[i], est.stddev[i],
                            est.imag_mean[i]);
                rmse_csv.row(ds, fs, n,
                             kernel_rmse(est, [&](double d) {
                                 return dist.kernel_target(d);
                             }));
            }
    return 0;
}

// ---- kernel2d -------------------------------------------------------------

struct Kernel2dArgs {
    std::string mode = "cartesian";
    std::size_t n = 1024;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    double d_max = 4.0, d_step = 0.25;
    std::string out = "kernel2d.csv";
};

std::vector<double> power_of(const std::vector<double>& mean, std::size_t gx,
                             std::size_t gy) {
    std::vector<cplx> spec(mean.begin(), mean.end());
    for (std::size_t i = 0; i < gx; ++i) dft_forward(spec.data() + i * gy, gy);
    cvec col(gx);
    for (std::size_t j = 0; j < gy; ++j) {
        for (std::size_t i = 0; i < gx; ++i) col[i] = spec[i * gy + j];
        dft_forward(col.data(), gx);
        for (std::size_t i = 0; i < gx; ++i) spec[i * gy + j] = col[i];
    }
    std::vector<double> power(gx * gy);
    double total = 0.0;
    for (std::size_t c = 0; c < power.size(); ++c)
        total += power[c] = std::norm(spec[c]);
    if (total > 0.0)
        for (double& v : power) v /= total;
    return power;
}

int cmd_kernel2d(const Kernel2dArgs& a) {
    auto grid = linspace(-a.d_max, a.d_max, a.d_step);
    const std::size_t g = grid.size();
    std::vector<double> mean;
    if (a.mode == "tensor") {
        mean.assign(g * g, 0.0);
        for (std::size_t t = 0; t < a.trials; ++t) {
            std::uint64_t s = Rng::trial_seed(a.seed, t);
            Rng rng(s);
            FpeEncoder ex = FpeEncoder::sample_base(
                PhaseDistribution::uniform(), Family::hadamard, a.n,
                rng.next_u64());
            FpeEncoder ey = FpeEncoder::sample_base(
                PhaseDistribution::uniform(), Family::hadamard, a.n,
                rng.next_u64());
            auto origin = tensor_encode(ex, ey, 0.0, 0.0);
            for (std::size_t i = 0; i < g; ++i)
                for (std::size_t j = 0; j < g; ++j)
                    mean[i * g + j] +=
                        tensor_inner(tensor_encode(ex, ey, grid[i], grid[j]),
                                     origin)
                            .real();
        }
        for (double& v : mean) v /= double(a.trials);
    } else {
        auto uniform_had = [&](std::uint64_t s) {
            return FpeEncoder::sample_base(PhaseDistribution::uniform(),
                                           Family::hadamard, a.n, s);
        };
        auto uniform_cc = [&](std::uint64_t s) {
            return FpeEncoder::sample_base(PhaseDistribution::uniform(),
                                           Family::circular, a.n, s);
        };
        MultiEncoder enc = [&]() {
            if (a.mode == "cartesian")
                return MultiEncoder::cartesian(
                    {uniform_had(a.seed), uniform_had(a.seed + 1)});
            if (a.mode == "hex_joint")
                return MultiEncoder::joint2d(a.n, hexagon_joint_phases,
                                             a.seed);
            if (a.mode == "hex_concat")
                return MultiEncoder::hex_concat(uniform_had(a.seed),
                                                uniform_had(a.seed + 1));
            if (a.mode == "hex_cc")
                return MultiEncoder::hex_cc_projection(uniform_cc(a.seed),
                                                       uniform_cc(a.seed + 1),
                                                       uniform_cc(a.seed + 2));
            if (a.mode == "lattice:square")
                return MultiEncoder::joint2d(
                    a.n,
                    [](std::size_t n, std::uint64_t s) {
                        return lattice_phases({kPi / 2.0, 0.0},
                                              {0.0, kPi / 2.0}, 2, n, s);
                    },
                    a.seed);
            if (a.mode == "lattice:hex")
                return MultiEncoder::joint2d(
                    a.n,
                    [](std::size_t n, std::uint64_t s) {
                        return lattice_phases(
                            {kPi / 2.0, 0.0},
                            {kPi / 4.0, kPi * std::sqrt(3.0) / 4.0}, 3, n, s);
                    },
                    a.seed);
            throw CLI::ValidationError("--mode", "unknown 2-D mode " + a.mode);
        }();
        Kernel2DEstimate est =
            estimate_kernel_2d(enc, grid, grid, a.trials, a.seed);
        mean = est.mean;
    }
    std::vector<double> power = power_of(mean, g, g);

    CsvWriter csv(a.out);
    CsvWriter spec_csv(with_suffix(a.out, "_spectrum"));
    for (CsvWriter* c : {&csv, &spec_csv}) {
        common_header(*c, a.seed);
        c->comment("mode", a.mode);
        c->comment_val("n", a.n);
        c->comment_val("trials", a.trials);
        c->comment_val("d_max", a.d_max);
        c->comment_val("d_step", a.d_step);
    }
    csv.header({"dx", "dy", "mean"});
    spec_csv.header({"fx_index", "fy_index", "power"});
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            csv.row(grid[i], grid[j], mean[i * g + j]);
            spec_csv.row(i, j, power[i * g + j]);
        }
    return 0;
}

// ---- decode ---------------------------------------------------------------

struct DecodeArgs {
    std::string mode = "point";
    std::vector<double> snr_list{-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0};
    std::vector<std::size_t> terms_list{1, 2, 3, 4, 5};
    std::vector<std::size_t> n_list{64, 128, 256};
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    double beta = 1.6;
    std::size_t k_max = 20;
    std::string out = "decode.csv";
};

int cmd_decode(const DecodeArgs& a) {
    CsvWriter csv(a.out);
    common_header(csv, a.seed);
    csv.comment("mode", a.mode);
    csv.comment("n", join_num(a.n_list));
    csv.comment_val("trials", a.trials);
    csv.comment_val("beta", a.beta);
    csv.comment_val("k_max", a.k_max);
    if (a.mode == "point") {
        csv.comment("snr_db", join_num(a.snr_list));
        csv.header({"snr_db", "n", "rmse", "detect_rate"});
        for (const auto& row : decode_point_sweep(a.snr_list, a.n_list,
                                                  a.trials, a.seed, a.beta,
                                                  a.k_max))
            csv.row(row.snr_db, row.n, row.rmse, row.detect_rate);
    } else if (a.mode == "function") {
        csv.comment("terms", join_num(a.terms_list));
        csv.header({"terms", "n", "cosine_sim"});
        for (const auto& row : decode_function_sweep(a.terms_list, a.n_list,
                                                     a.trials, a.seed, a.beta,
                                                     a.k_max))
            csv.row(row.terms, row.n, row.cosine_sim);
    } else {
        throw CLI::ValidationError("--mode", "unknown decode mode " + a.mode);
    }
    return 0;
}

// ---- density --------------------------------------------------------------

struct DensityArgs {
    std::vector<std::size_t> k_list{81};
    std::vector<std::size_t> n_list{32, 64, 128, 256, 512};
    std::size_t runs = 100;
    double f_c = 0.4;
    std::uint64_t seed = 1;
    bool quick = false;
    std::string out = "density.csv";
};

int cmd_density(DensityArgs a) {
    if (a.quick) a.runs = std::min<std::size_t>(a.runs, 10);
    CsvWriter csv(a.out);
    common_header(csv, a.seed);
    csv.comment("k", join_num(a.k_list));
    csv.comment("n", join_num(a.n_list));
    csv.comment_val("runs", a.runs);
    csv.comment_val("f_c", a.f_c);
    csv.header({"kind", "k", "n", "mise"});
    DensitySweepResult res =
        density_experiment(a.k_list, a.n_list, a.runs, a.seed, a.f_c);
    for (std::size_t ki = 0; ki < res.k_list.size(); ++ki) {
        csv.row("numeric", res.k_list[ki], 0, res.mise_numeric[ki]);
        for (std::size_t ni = 0; ni < res.n_list.size(); ++ni)
            csv.row("vfa", res.k_list[ki], res.n_list[ni],
                    res.mise_vfa[ki][ni]);
    }
    return 0;
}

// ---- regress --------------------------------------------------------------

struct RegressArgs {
    std::vector<std::size_t> k_list{150};
    std::vector<std::size_t> n_list{16, 32, 64, 128, 256};
    std::size_t runs = 100;
    double c_empirical = 20.0, c_tikhonov = 30.0, lambda = 0.01;
    std::uint64_t seed = 1;
    bool quick = false;
    std::string out = "regress.csv";
};

int cmd_regress(RegressArgs a) {
    if (a.quick) a.runs = std::min<std::size_t>(a.runs, 10);
    CsvWriter csv(a.out);
    common_header(csv, a.seed);
    csv.comment("k", join_num(a.k_list));
    csv.comment("n", join_num(a.n_list));
    csv.comment_val("runs", a.runs);
    csv.comment_val("c_empirical", a.c_empirical);
    csv.comment_val("c_tikhonov", a.c_tikhonov);
    csv.comment_val("lambda", a.lambda);
    csv.header({"method", "k", "n", "rmse"});
    for (const auto& row :
         regression_experiment(a.k_list, a.n_list, a.runs, a.seed,
                               a.c_empirical, a.c_tikhonov, a.lambda))
        csv.row(method_name(row.method), row.k, row.n, row.rmse);
    return 0;
}

// ---- image ----------------------------------------------------------------

struct ImageArgs {
    std::string text = "VFA";
    std::string input;  // optional PGM instead of rendered text
    std::size_t size = 56;
    std::size_t n = 4096;
    double dx = 14.0, dy = 7.0;
    std::uint64_t seed = 1;
    std::string out = "image";
};

int cmd_image(const ImageArgs& a) {
    Image original = a.input.empty() ? render_text(a.text, a.size, a.size)
                                     : load_pgm(a.input);
    FpeEncoder ex = make_image_encoder(original.width, a.n, a.seed);
    FpeEncoder ey = make_image_encoder(original.height, a.n, a.seed + 1);
    ImageScene scene = image_encode(original, ex, ey);
    save_pgm(a.out + "_original.pgm", original);
    save_pgm(a.out + "_scene.pgm", image_decode(scene));
    Image moved = image_decode(image_translate(scene, a.dx, a.dy));
    save_pgm(a.out + "_translated.pgm", moved);
    std::cout << "wrote " << a.out << "_{original,scene,translated}.pgm"
              << " (n=" << a.n << ", seed=" << a.seed << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vector function architecture experiment harness"};
    app.require_subcommand(1);

    KernelArgs ka;
    auto* kernel = app.add_subcommand("kernel", "1-D similarity kernel sweep");
    kernel->add_option("--dist", ka.dists, "phase distribution specs");
    kernel->add_option("--family", ka.families,
                       "hadamard, circular, block, or lcc");
    kernel->add_option("--n", ka.n_list, "vector dimensions");
    kernel->add_option("--blocks", ka.blocks, "block count for block/lcc");
    kernel->add_option("--trials", ka.trials, "encoders per estimate");
    kernel->add_option("--seed", ka.seed, "base seed");
    kernel->add_option("--d-max", ka.d_max, "grid half-width");
    kernel->add_option("--d-step", ka.d_step, "grid step");
    kernel->add_option("--out", ka.out, "output CSV path");

    Kernel2dArgs k2;
    auto* kernel2d = app.add_subcommand("kernel2d", "2-D kernel and spectrum");
    kernel2d->add_option("--mode", k2.mode,
                         "cartesian, tensor, hex_joint, hex_concat, hex_cc, "
                         "lattice:square, lattice:hex");
    kernel2d->add_option("--n", k2.n, "vector dimension");
    kernel2d->add_option("--trials", k2.trials, "encoders per estimate");
    kernel2d->add_option("--seed", k2.seed, "base seed");
    kernel2d->add_option("--d-max", k2.d_max, "grid half-width");
    kernel2d->add_option("--d-step", k2.d_step, "grid step");
    kernel2d->add_option("--out", k2.out, "output CSV path");

    DecodeArgs da;
    auto* decode = app.add_subcommand("decode", "decoder accuracy sweeps");
    decode->add_option("--mode", da.mode, "point or function");
    decode->add_option("--snr-list", da.snr_list, "SNRs in dB (point mode)");
    decode->add_option("--terms-list", da.terms_list,
                       "term counts (function mode)");
    decode->add_option("--n", da.n_list, "vector dimensions");
    decode->add_option("--trials", da.trials, "trials per cell");
    decode->add_option("--seed", da.seed, "base seed");
    decode->add_option("--beta", da.beta, "anchor spacing");
    decode->add_option("--kmax", da.k_max, "anchor count");
    decode->add_option("--out", da.out, "output CSV path");

    DensityArgs dena;
    std::string den_preset = "fig10";
    auto* density = app.add_subcommand("density", "BLML density MISE sweep");
    density->add_option("--preset", den_preset, "named preset (fig10)")
        ->check(CLI::IsMember({"fig10"}));
    density->add_option("--k", dena.k_list, "sample counts");
    density->add_option("--n", dena.n_list, "vector dimensions");
    density->add_option("--runs", dena.runs, "Monte Carlo runs");
    density->add_option("--fc", dena.f_c, "cutoff frequency");
    density->add_option("--seed", dena.seed, "base seed");
    density->add_flag("--quick", dena.quick, "cap runs at 10");
    density->add_option("--out", dena.out, "output CSV path");

    RegressArgs ra;
    std::string reg_preset = "fig11";
    auto* regress = app.add_subcommand("regress", "kernel regression sweep");
    regress->add_option("--preset", reg_preset, "named preset (fig11)")
        ->check(CLI::IsMember({"fig11"}));
    regress->add_option("--k", ra.k_list, "sample counts");
    regress->add_option("--n", ra.n_list, "vector dimensions");
    regress->add_option("--runs", ra.runs, "Monte Carlo runs");
    regress->add_option("--c-empirical", ra.c_empirical,
                        "empirical bandwidth");
    regress->add_option("--c-tikhonov", ra.c_tikhonov, "tikhonov bandwidth");
    regress->add_option("--lambda", ra.lambda, "ridge parameter");
    regress->add_option("--seed", ra.seed, "base seed");
    regress->add_flag("--quick", ra.quick, "cap runs at 10");
    regress->add_option("--out", ra.out, "output CSV path");

    ImageArgs ia;
    std::string img_preset = "image-demo";
    auto* image = app.add_subcommand("image", "torus image composition demo");
    image->add_option("--preset", img_preset, "named preset (image-demo)")
        ->check(CLI::IsMember({"image-demo"}));
    image->add_option("--text", ia.text, "text to render");
    image->add_option("--input", ia.input, "input PGM instead of text");
    image->add_option("--size", ia.size, "raster extent");
    image->add_option("--n", ia.n, "vector dimension");
    image->add_option("--dx", ia.dx, "translation in x");
    image->add_option("--dy", ia.dy, "translation in y");
    image->add_option("--seed", ia.seed, "base seed");
    image->add_option("--out", ia.out, "output path prefix");

    bool st_quick = false;
    std::uint64_t st_seed = 0x5eedULL;
    auto* selftest = app.add_subcommand("selftest", "acceptance criteria");
    selftest->add_flag("--quick", st_quick, "reduced trial counts");
    selftest->add_option("--seed", st_seed, "base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (kernel->parsed()) return cmd_kernel(ka);
        if (kernel2d->parsed()) return cmd_kernel2d(k2);
        if (decode->parsed()) return cmd_decode(da);
        if (density->parsed()) return cmd_density(dena);
        if (regress->parsed()) return cmd_regress(ra);
        if (image->parsed()) return cmd_image(ia);
        if (selftest->parsed())
            return all_passed(run_selftest(st_quick, st_seed, std::cout)) ? 0
                                                                          : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
