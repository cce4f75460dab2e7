#include "vfa/selftest.hpp"

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "vfa/decode.hpp"
#include "vfa/dft.hpp"
#include "vfa/density.hpp"
#include "vfa/image.hpp"
#include "vfa/regression.hpp"
#include "vfa/shaping.hpp"

namespace vfa {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc_pi(double d) { return d == 0.0 ? 1.0 : std::sin(kPi * d) / (kPi * d); }

double max_abs_diff(const HDVector& x, const HDVector& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " FAILED:" << what;
        }
    }
    template <typename T>
    void note(const std::string& key, T value) {
        detail << " " << key << "=" << value;
    }
};

FpeEncoder uniform_encoder(Family fam, std::size_t n, std::uint64_t seed,
                           std::size_t blocks = 0) {
    return FpeEncoder::sample_base(PhaseDistribution::uniform(), fam, n, seed,
                                   blocks);
}

// --- criterion 1: kernel universality across binding families --------------

Check criterion_universality(bool quick, std::uint64_t seed) {
    Check c;
    const std::size_t n = 1024;
    const std::size_t trials = quick ? 20 : 100;
    auto grid = linspace(-5.0, 5.0, 0.05);
    std::vector<KernelEstimate> ests;
    const char* tags[] = {"hadamard", "circular", "block32"};
    Family fams[] = {Family::hadamard, Family::circular, Family::block};
    for (int i = 0; i < 3; ++i) {
        FpeEncoder enc = uniform_encoder(fams[i], n, seed + i,
                                         fams[i] == Family::block ? 32 : 0);
        ests.push_back(estimate_kernel(enc, grid, trials, seed ^ (i * 7)));
        double rmse = kernel_rmse(ests.back(), sinc_pi);
        c.note(std::string("rmse_") + tags[i], rmse);
        c.require(rmse < 0.06, std::string("rmse_") + tags[i]);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            double r = kernel_rmse(ests[i], ests[j]);
            c.require(r < 0.06, std::string("pair_") + tags[i] + "_" + tags[j]);
        }
    return c;
}

// --- criterion 2: 1/sqrt(n) error scaling ----------------------------------

Check criterion_scaling(bool quick, std::uint64_t seed) {
    Check c;
    const std::size_t trials = quick ? 10 : 25;
    // The RMSE of a single mean-curve fluctuates by ~15% regardless of the
    // trial count (few independent grid regions), so average it over
    // independent encoder draws before comparing across n.
    const std::size_t reps = quick ? 4 : 8;
    auto grid = linspace(-5.0, 5.0, 0.05);
    double lo = 1e300, hi = 0.0;
    for (std::size_t n : {64u, 256u, 1024u}) {
        double scaled = 0.0;
        for (std::size_t rep = 0; rep < reps; ++rep) {
            FpeEncoder enc = uniform_encoder(Family::hadamard, n,
                                             seed + n + 7919 * rep);
            double rmse = kernel_rmse(
                estimate_kernel(enc, grid, trials, (seed ^ n) + rep), sinc_pi);
            scaled += rmse * std::sqrt(double(n)) / double(reps);
        }
        c.note("scaled_" + std::to_string(n), scaled);
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
    }
    c.require(hi / lo < 2.0, "scaled-rmse spread");
    return c;
}

// --- criterion 3: shaped kernels vs numeric Fourier targets ----------------

Check criterion_shaping(bool quick, std::uint64_t seed) {
    Check c;
    const std::size_t n = 1024;
    const std::size_t trials = quick ? 20 : 100;
    auto grid = linspace(-5.0, 5.0, 0.05);
    const char* specs[] = {"gaussian:1", "laplace:1", "triangular:3.14159265",
                           "truncsinc:2"};
    for (const char* s : specs) {
        PhaseDistribution dist = PhaseDistribution::parse(s);
        FpeEncoder enc = FpeEncoder::sample_base(dist, Family::hadamard, n,
                                                 seed ^ std::size_t(s[0]));
        double rmse = kernel_rmse(
            estimate_kernel(enc, grid, trials, seed ^ std::size_t(s[1])),
            [&](double d) { return dist.kernel_target(d); });
        c.note(std::string("rmse_") + s, rmse);
        c.require(rmse < 0.06, s);
    }
    return c;
}

// --- criterion 4: algebraic exactness --------------------------------------

Check criterion_exactness(bool quick, std::uint64_t seed) {
    Check c;
    const std::size_t cases = quick ? 30 : 100;
    Rng rng(seed);
    for (auto [fam, blocks] :
         {std::pair{Family::hadamard, std::size_t{0}},
          std::pair{Family::circular, std::size_t{0}},
          std::pair{Family::block, std::size_t{16}}}) {
        FpeEncoder enc = uniform_encoder(fam, 64, rng.next_u64(), blocks);
        double worst = 0.0;
        for (std::size_t i = 0; i < cases; ++i) {
            double r1 = rng.uniform(-20.0, 20.0);
            double r2 = rng.uniform(-20.0, 20.0);
            worst = std::max(worst,
                             max_abs_diff(enc.encode(r1 + r2),
                                          bind(enc.encode(r1),
                                               enc.encode(r2))));
        }
        c.note("bind_" + family_name(fam), worst);
        c.require(worst < 1e-10, "bind compat " + family_name(fam));
    }
    // Shift as re-encoding: same components to 1e-10.
    FpeEncoder enc = uniform_encoder(Family::hadamard, 128, rng.next_u64());
    double worst = 0.0;
    for (std::size_t i = 0; i < (quick ? 10u : 20u); ++i) {
        std::vector<double> pts = {rng.uniform(-5.0, 5.0),
                                   rng.uniform(-5.0, 5.0),
                                   rng.uniform(-5.0, 5.0)};
        std::vector<double> coef = {rng.uniform(-1.0, 1.0),
                                    rng.uniform(-1.0, 1.0),
                                    rng.uniform(-1.0, 1.0)};
        double r = rng.uniform(-8.0, 8.0);
        FunctionVector f = from_samples(enc, pts, coef);
        std::vector<double> moved = pts;
        for (double& p : moved) p -= r;
        worst = std::max(worst, max_abs_diff(shift(f, r).vec(),
                                             from_samples(enc, moved, coef)
                                                 .vec()));
    }
    c.note("shift", worst);
    c.require(worst < 1e-10, "shift identity");
    return c;
}

// --- criterion 5: function algebra vs kernel-space oracle ------------------

Check criterion_algebra(bool quick, std::uint64_t seed) {
    Check c;
    const std::size_t n = 2048;
    const std::size_t instances = quick ? 10 : 50;
    Rng rng(seed);
    double worst_eval = 0.0, worst_add = 0.0, worst_conv = 0.0,
           worst_inner = 0.0, worst_shift = 0.0;
    for (std::size_t inst = 0; inst < instances; ++inst) {
        FpeEncoder enc = uniform_encoder(Family::hadamard, n, rng.next_u64());
        auto random_fn = [&](std::size_t max_terms, double mass) {
            std::size_t terms = 1 + rng.uniform_index(max_terms);
            std::vector<double> pts(terms), coef(terms);
            for (auto& p : pts) p = rng.uniform(-10.0, 10.0);
            double m2 = 0.0;
            for (auto& a : coef) {
                a = rng.uniform(-1.0, 1.0);
                m2 += a * a;
            }
            for (auto& a : coef) a *= std::sqrt(mass / m2);
            return from_samples(enc, pts, coef);
        };
        // Every compared object stays at <= 8 terms and unit coefficient
        // power: sums split 4+4 with half the mass per operand, and
        // convolutions factor 2x4, since the estimation error scales with
        // the total coefficient mass of the result.
        FunctionVector f = random_fn(8, 1.0);
        FunctionVector a4 = random_fn(4, 0.5);
        FunctionVector b4 = random_fn(4, 0.5);
        FunctionVector p2 = random_fn(2, 1.0);
        FunctionVector fg = add(a4, b4);
        FunctionVector conv = convolve(p2, b4);
        for (int si = 0; si < 11; ++si) {
            double s = rng.uniform(-12.0, 12.0);
            double of = oracle_eval(sinc_pi, f.terms(), s);
            double oa = oracle_eval(sinc_pi, a4.terms(), s);
            double ob = oracle_eval(sinc_pi, b4.terms(), s);
            worst_eval = std::max(worst_eval, std::abs(eval(f, s) - of));
            worst_add = std::max(worst_add,
                                 std::abs(eval(fg, s) - (oa + ob)));
            worst_conv = std::max(
                worst_conv,
                std::abs(eval(conv, s) -
                         oracle_eval(sinc_pi, conv.terms(), s)));
        }
        double oracle_ip = 0.0;
        for (const Term& a : a4.terms())
            for (const Term& b : b4.terms())
                oracle_ip += a.alpha * b.alpha * sinc_pi(a.r[0] - b.r[0]);
        worst_inner =
            std::max(worst_inner, std::abs(f_inner(a4, b4) - oracle_ip));
        double r = rng.uniform(-5.0, 5.0);
        FunctionVector fs = shift(f, r);
        for (int si = 0; si < 4; ++si) {
            double s = rng.uniform(-12.0, 12.0);
            worst_shift = std::max(worst_shift,
                                   std::abs(eval(fs, s) - eval(f, s + r)));
        }
    }
    c.note("eval", worst_eval);
    c.note("add", worst_add);
    c.note("conv", worst_conv);
    c.note("finner", worst_inner);
    c.note("shift", worst_shift);
    c.require(worst_eval < 0.08, "eval oracle");
    c.require(worst_add < 0.08, "add oracle");
    c.require(worst_conv < 0.08, "convolve oracle");
    c.require(worst_inner < 0.08, "f_inner oracle");
    c.require(worst_shift < 1e-9, "shift exactness");
    return c;
}

// --- criterion 6: periodic kernels and the image torus ---------------------

Check criterion_periodic(bool quick, std::uint64_t seed) {
    Check c;
    for (int l : {3, 8, 56}) {
        for (Family fam : {Family::hadamard, Family::circular}) {
            FpeEncoder enc = FpeEncoder::sample_base(
                PhaseDistribution::discrete_roots(l), fam, 64,
                seed ^ std::size_t(l));
            double worst = 0.0;
            for (double r : {0.25, 1.5, 7.75, -3.5})
                worst = std::max(
                    worst, max_abs_diff(enc.encode(r),
                                        enc.encode(r + double(l))));
            c.require(worst == 0.0,
                      "roots " + std::to_string(l) + " " + family_name(fam));
        }
    }
    const std::size_t n = quick ? 512 : 2048;
    FpeEncoder ex = make_image_encoder(56, n, seed + 1);
    FpeEncoder ey = make_image_encoder(56, n, seed + 2);
    ImageScene scene = image_encode(render_text("VFA", 56, 56), ex, ey);
    double torus =
        max_abs_diff(image_translate(scene, 56.0, 56.0).vec, scene.vec);
    c.note("torus", torus);
    c.require(torus < 1e-10, "image torus");
    return c;
}

// --- criterion 7: decoder --------------------------------------------------

Check criterion_decoder(bool quick, std::uint64_t seed) {
    Check c;
    Rng rng(seed);
    FpeEncoder enc = uniform_encoder(Family::hadamard, 256, rng.next_u64());
    AnchorCodebook cb = build_anchors(enc, 1.6, 20);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        double r = rng.uniform(1.0, 30.0);
        DecodeResult res = decode_point(cb, enc.encode(r));
        worst = std::max(worst, std::abs(res.r_hat - r));
    }
    c.note("noiseless", worst);
    c.require(worst < 1e-4, "noiseless error");

    const std::size_t trials = quick ? 40 : 200;
    std::vector<double> snrs = {-10.0, 0.0, 10.0, 20.0};
    std::vector<std::size_t> ns = {64, 128, 256};
    auto rows = decode_point_sweep(snrs, ns, trials, seed);
    auto rmse_at = [&](double snr, std::size_t n) {
        for (const auto& r : rows)
            if (r.snr_db == snr && r.n == n) return r.rmse;
        return std::nan("");
    };
    for (std::size_t n : ns)
        for (std::size_t si = 1; si < snrs.size(); ++si)
            c.require(rmse_at(snrs[si], n) < rmse_at(snrs[si - 1], n),
                      "rmse vs snr at n=" + std::to_string(n));
    for (double snr : snrs)
        for (std::size_t ni = 1; ni < ns.size(); ++ni)
            c.require(rmse_at(snr, ns[ni]) < rmse_at(snr, ns[ni - 1]),
                      "rmse vs n at snr=" + std::to_string(int(snr)));
    c.note("rmse_0db_256", rmse_at(0.0, 256));

    double rate = peel_success_rate(5, 512, quick ? 40 : 200, seed ^ 99);
    c.note("peel", rate);
    c.require(rate >= 0.95, "peeling success");
    return c;
}

// --- criterion 8: density estimation ---------------------------------------

Check criterion_density(bool quick, std::uint64_t seed) {
    Check c;
    const std::size_t runs = quick ? 10 : 100;
    auto res = density_experiment({16, 81, 256}, {32, 512}, runs, seed);
    auto vfa = [&](std::size_t k, std::size_t n) {
        std::size_t ki = 0, ni = 0;
        for (std::size_t i = 0; i < res.k_list.size(); ++i)
            if (res.k_list[i] == k) ki = i;
        for (std::size_t i = 0; i < res.n_list.size(); ++i)
            if (res.n_list[i] == n) ni = i;
        return res.mise_vfa[ki][ni];
    };
    auto num = [&](std::size_t k) {
        for (std::size_t i = 0; i < res.k_list.size(); ++i)
            if (res.k_list[i] == k) return res.mise_numeric[i];
        return std::nan("");
    };
    c.note("num81", num(81));
    c.note("vfa81n512", vfa(81, 512));
    c.note("vfa81n32", vfa(81, 32));
    c.require(vfa(81, 512) <= 1.5 * num(81), "vfa within 1.5x numeric");
    c.require(vfa(81, 512) < vfa(81, 32), "mise decreases with n");
    // Plateau: the numeric curve keeps dropping with k while the small-n VFA
    // curve stalls at its dimension floor.
    c.note("num_ratio", num(256) / num(16));
    c.note("vfa32_ratio", vfa(256, 32) / vfa(81, 32));
    c.require(num(256) < 0.7 * num(16), "numeric improves with k");
    c.require(vfa(256, 32) > 0.8 * vfa(81, 32), "vfa n=32 plateaus");
    return c;
}

// --- criterion 9: regression -----------------------------------------------

Check criterion_regression(bool quick, std::uint64_t seed) {
    Check c;
    const std::size_t runs = quick ? 10 : 100;
    auto rows = regression_experiment({150}, {16, 32, 64, 128, 256}, runs,
                                      seed);
    auto rmse_of = [&](const std::vector<RegressSweepRow>& rs,
                       RegressMethod m, std::size_t k, std::size_t n) {
        for (const auto& r : rs)
            if (r.method == m && r.k == k && r.n == n) return r.rmse;
        return std::nan("");
    };
    double emp256 = rmse_of(rows, RegressMethod::empirical, 150, 256);
    double tik256 = rmse_of(rows, RegressMethod::tikhonov, 150, 256);
    c.note("emp_n256", emp256);
    c.note("tik_n256", tik256);
    c.require(tik256 < emp256, "tikhonov beats empirical");
    // n-floor: first n whose RMSE is within 20% of the large-n value.
    auto floor_of = [&](RegressMethod m) {
        double target = 1.2 * rmse_of(rows, m, 150, 256);
        for (std::size_t n : {16u, 32u, 64u, 128u, 256u})
            if (rmse_of(rows, m, 150, n) <= target) return n;
        return std::size_t{256};
    };
    std::size_t tik_floor = floor_of(RegressMethod::tikhonov);
    std::size_t emp_floor = floor_of(RegressMethod::empirical);
    c.note("tik_floor", tik_floor);
    c.note("emp_floor", emp_floor);
    c.require(tik_floor < emp_floor, "tikhonov floor is smaller");

    auto krows = regression_experiment({16, 64, 256, 1024}, {128},
                                       quick ? 5 : 40, seed ^ 5);
    for (RegressMethod m :
         {RegressMethod::empirical, RegressMethod::tikhonov}) {
        double r16 = rmse_of(krows, m, 16, 128);
        double r64 = rmse_of(krows, m, 64, 128);
        double r256 = rmse_of(krows, m, 256, 128);
        double r1024 = rmse_of(krows, m, 1024, 128);
        c.note(method_name(m) + "_k16", r16);
        c.note(method_name(m) + "_k1024", r1024);
        c.require(r16 > r64, method_name(m) + " k16>k64");
        c.require(r64 > r256 * 0.95, method_name(m) + " k64>~k256");
        c.require(r16 > r1024, method_name(m) + " k16>k1024");
    }
    return c;
}

// --- criterion 10: 2-D kernels ---------------------------------------------

Check criterion_2d(bool quick, std::uint64_t seed) {
    Check c;
    auto grid = linspace(-8.0, 8.0, 0.25);
    const std::size_t trials = quick ? 3 : 8;

    // Spectral target from the analytic separable sinc kernel, pushed
    // through the same spectrum pipeline.
    std::size_t g = grid.size();
    Kernel2DEstimate target;
    target.dx = target.dy = grid;
    target.mean.resize(g * g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            target.mean[i * g + j] = sinc_pi(grid[i]) * sinc_pi(grid[j]);
    {
        // Reuse estimate_kernel_2d's spectrum path via a 1-trial stand-in:
        // compute the power spectrum directly here instead.
        std::vector<cplx> spec(target.mean.begin(), target.mean.end());
        for (std::size_t i = 0; i < g; ++i)
            dft_forward(spec.data() + i * g, g);
        cvec col(g);
        for (std::size_t j = 0; j < g; ++j) {
            for (std::size_t i = 0; i < g; ++i) col[i] = spec[i * g + j];
            dft_forward(col.data(), g);
            for (std::size_t i = 0; i < g; ++i) spec[i * g + j] = col[i];
        }
        target.power.resize(g * g);
        double total = 0.0;
        for (std::size_t i = 0; i < g * g; ++i)
            total += target.power[i] = std::norm(spec[i]);
        for (auto& v : target.power) v /= total;
    }
    std::vector<bool> inband(g * g);
    for (std::size_t i = 0; i < g * g; ++i)
        inband[i] = target.power[i] > 1e-9;

    double prev_dev = 1e300, prev_hex = 1e300;
    for (std::size_t n : {256u, 1024u, 4096u}) {
        MultiEncoder cart = MultiEncoder::cartesian(
            {uniform_encoder(Family::hadamard, n, seed + n),
             uniform_encoder(Family::hadamard, n, seed + n + 1)});
        Kernel2DEstimate est =
            estimate_kernel_2d(cart, grid, grid, trials, seed ^ n);
        double dev = 0.0;
        for (std::size_t i = 0; i < g * g; ++i)
            if (inband[i]) dev += std::abs(est.power[i] - target.power[i]);
        c.note("dev_" + std::to_string(n), dev);
        c.require(dev < prev_dev, "in-band deviation at n=" +
                                      std::to_string(n));
        prev_dev = dev;

        MultiEncoder hex = MultiEncoder::hex_concat(
            uniform_encoder(Family::hadamard, n, seed + 2 * n),
            uniform_encoder(Family::hadamard, n, seed + 2 * n + 1));
        Kernel2DEstimate hest =
            estimate_kernel_2d(hex, grid, grid, trials, seed ^ (3 * n));
        double rmse = 0.0;
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) {
                double e = hest.mean[i * g + j] - sinc_hex(grid[i], grid[j]);
                rmse += e * e;
            }
        rmse = std::sqrt(rmse / double(g * g));
        c.note("hex_" + std::to_string(n), rmse);
        c.require(rmse < prev_hex, "hex rmse at n=" + std::to_string(n));
        prev_hex = rmse;
    }

    // Lattice phases: exactly periodic kernel (period 4 for spacing pi/2).
    MultiEncoder lat = MultiEncoder::joint2d(
        512,
        [](std::size_t n, std::uint64_t s) {
            return lattice_phases({kPi / 2.0, 0.0}, {0.0, kPi / 2.0}, 2, n,
                                  s);
        },
        seed + 17);
    HDVector origin = lat.encode({0.0, 0.0});
    double worst = 0.0;
    for (auto [x, y] : {std::pair{0.5, 1.25}, std::pair{-1.75, 0.25},
                        std::pair{2.5, -3.5}}) {
        double k0 = inner(lat.encode({x, y}), origin).real();
        double k1 = inner(lat.encode({x + 4.0, y}), origin).real();
        double k2 = inner(lat.encode({x, y + 4.0}), origin).real();
        worst = std::max({worst, std::abs(k1 - k0), std::abs(k2 - k0)});
    }
    c.note("lattice_period", worst);
    c.require(worst < 1e-10, "lattice periodicity");

    // Gram of 32 random 2-D points: Hermitian, eigenvalues >= -1e-6.
    Rng rng(seed + 23);
    MultiEncoder cart = MultiEncoder::cartesian(
        {uniform_encoder(Family::hadamard, 512, rng.next_u64()),
         uniform_encoder(Family::hadamard, 512, rng.next_u64())});
    std::vector<HDVector> zs;
    for (int i = 0; i < 32; ++i)
        zs.push_back(cart.encode(
            {rng.uniform(-8.0, 8.0), rng.uniform(-8.0, 8.0)}));
    Eigen::MatrixXcd G(32, 32);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) G(i, j) = inner(zs[i], zs[j]);
    double herm = (G - G.adjoint()).cwiseAbs().maxCoeff();
    c.note("gram_herm", herm);
    c.require(herm < 1e-10, "gram hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        (G + G.adjoint()) / 2.0);
    double min_eig = es.eigenvalues().minCoeff();
    c.note("gram_mineig", min_eig);
    c.require(min_eig >= -1e-6, "gram eigenvalues");
    return c;
}

}  // namespace

std::vector<CriterionResult> run_selftest(bool quick, std::uint64_t seed,
                                          std::ostream& log) {
    struct Entry {
        int id;
        const char* name;
        std::function<Check(bool, std::uint64_t)> fn;
    };
    const Entry entries[] = {
        {1, "kernel-universality", criterion_universality},
        {2, "rmse-scaling", criterion_scaling},
        {3, "kernel-shaping", criterion_shaping},
        {4, "algebra-exactness", criterion_exactness},
        {5, "function-algebra-oracle", criterion_algebra},
        {6, "periodic-kernels", criterion_periodic},
        {7, "decoder", criterion_decoder},
        {8, "density-estimation", criterion_density},
        {9, "regression", criterion_regression},
        {10, "2d-kernels", criterion_2d},
    };
    std::vector<CriterionResult> results;
    for (const Entry& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = e.fn(quick, seed + std::uint64_t(e.id) * 1000);
        } catch (const std::exception& ex) {
            c.ok = false;
            c.detail << " EXCEPTION:" << ex.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        results.push_back({e.id, e.name, c.ok, secs, c.detail.str()});
        log << "[" << std::setw(2) << e.id << "] "
            << (c.ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(26)
            << e.name << std::right << std::fixed << std::setprecision(1)
            << std::setw(7) << secs << "s " << std::defaultfloat
            << c.detail.str() << "\n"
            << std::flush;
    }
    int passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    log << passed << "/" << results.size() << " criteria passed\n";
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace vfa
