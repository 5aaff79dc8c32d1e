#include "qtl/meansquare.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qtl/dirichlet.hpp"
#include "qtl/numeric_io.hpp"
#include "qtl/summation.hpp"

namespace qtl::meansquare {

namespace {

constexpr std::int64_t kChunk = 4096;  // d-indices per reduction chunk, fixed

struct Window {
    std::int64_t lo = 1;  // first candidate integer (inclusive)
    std::int64_t hi = 0;  // last candidate integer (inclusive); empty if hi < lo
};

// Integers t with weight(t / scale) > 0, i.e. left < t/scale < right.
Window support_window(const weights::BumpWeight& wt, double scale) {
    Window win;
    win.lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(wt.left() * scale)) + 1);
    win.hi = static_cast<std::int64_t>(std::ceil(wt.right() * scale)) - 1;
    return win;
}

// Fixed-chunk parallel reduction shared by both engines. inner(d) must be a
// pure function of d. Chunk boundaries and all accumulation orders are
// independent of the thread count.
template <class InnerFn>
BruteForceResult chunked_weighted_square_sum(const Window& dwin, double X,
                                             const weights::BumpWeight& w,
                                             const arith::MobiusTable& tables, int threads,
                                             const InnerFn& inner) {
    BruteForceResult out;
    if (dwin.hi < dwin.lo) return out;
    const std::int64_t span = dwin.hi - dwin.lo + 1;
    const std::int64_t n_chunks = (span + kChunk - 1) / kChunk;

    struct ChunkPartial {
        double sum = 0.0;
        std::int64_t count = 0;
    };
    std::vector<ChunkPartial> partials(static_cast<std::size_t>(n_chunks));

    auto run_chunk = [&](std::int64_t c) {
        const std::int64_t lo = dwin.lo + c * kChunk;
        const std::int64_t hi = std::min(dwin.hi, lo + kChunk - 1);
        summation::NeumaierSum acc;
        std::int64_t count = 0;
        for (std::int64_t d = lo; d <= hi; ++d) {
            if ((d & 1) == 0) continue;
            if (tables.mu[static_cast<std::size_t>(d)] == 0) continue;
            const double wv = w(static_cast<double>(d) / X);
            if (wv == 0.0) continue;
            ++count;
            const double s = inner(d);
            acc.add(wv * (s * s));
        }
        partials[static_cast<std::size_t>(c)] = ChunkPartial{acc.value(), count};
    };

    if (threads <= 1 || n_chunks == 1) {
        for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::int64_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::int64_t c = next.fetch_add(1);
                if (c >= n_chunks) return;
                run_chunk(c);
            }
        };
        std::vector<std::thread> pool;
        const int n_threads = static_cast<int>(std::min<std::int64_t>(threads, n_chunks));
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    summation::NeumaierSum total;
    for (const auto& p : partials) {
        total.add(p.sum);
        out.d_count += p.count;
    }
    out.s = total.value();
    return out;
}

void require_coverage(const arith::MobiusTable& tables, const Window& dwin, const Window& nwin) {
    if (tables.limit < dwin.hi || tables.limit < nwin.hi)
        throw std::invalid_argument("mean square: sieve does not cover the support windows");
}

}  // namespace

BruteForceResult brute_force_S(double X, double Y, const weights::BumpWeight& w,
                               const weights::BumpWeight& phi, const arith::MobiusTable& tables,
                               const EngineOptions& opt) {
    if (!(X > 0.0) || !(Y > 0.0)) throw std::invalid_argument("brute_force_S: X, Y must be positive");
    const double yscale = opt.inner_scale == InnerScale::Y ? Y : X;
    const Window dwin = support_window(w, X);
    const Window nwin = support_window(phi, yscale);
    require_coverage(tables, dwin, nwin);

    // Residue tables: for each contributing n, chi_{8d}(n) = (2|n) * (d mod n | n).
    struct NEntry {
        std::int64_t n;
        double coeff;  // mu(n) * (2|n) * Phi(n/yscale)
        std::vector<std::int8_t> table;
    };
    std::vector<NEntry> ns;
    for (std::int64_t n = nwin.lo; n <= nwin.hi; ++n) {
        if ((n & 1) == 0) continue;
        const int mu = tables.mu[static_cast<std::size_t>(n)];
        if (mu == 0) continue;
        const double pv = phi(static_cast<double>(n) / yscale);
        if (pv == 0.0) continue;
        NEntry e;
        e.n = n;
        e.coeff = static_cast<double>(mu * arith::kronecker(2, n)) * pv;
        e.table.resize(static_cast<std::size_t>(n));
        for (std::int64_t r = 0; r < n; ++r)
            e.table[static_cast<std::size_t>(r)] = static_cast<std::int8_t>(arith::kronecker(r, n));
        ns.push_back(std::move(e));
    }

    auto inner = [&ns](std::int64_t d) {
        double s = 0.0;
        for (const NEntry& e : ns) {
            const int t = e.table[static_cast<std::size_t>(d % e.n)];
            if (t > 0)
                s += e.coeff;
            else if (t < 0)
                s -= e.coeff;
        }
        return s;
    };
    return chunked_weighted_square_sum(dwin, X, w, tables, opt.threads, inner);
}

BruteForceResult naive_mean_square(double X, double Y, const weights::BumpWeight& w,
                                   const weights::BumpWeight& phi, const arith::MobiusTable& tables,
                                   InnerScale inner_scale) {
    if (!(X > 0.0) || !(Y > 0.0))
        throw std::invalid_argument("naive_mean_square: X, Y must be positive");
    const double yscale = inner_scale == InnerScale::Y ? Y : X;
    const Window dwin = support_window(w, X);
    const Window nwin = support_window(phi, yscale);
    require_coverage(tables, dwin, nwin);

    auto inner = [&](std::int64_t d) {
        double s = 0.0;
        for (std::int64_t n = nwin.lo; n <= nwin.hi; ++n) {
            const int mu = tables.mu[static_cast<std::size_t>(n)];
            if (mu == 0) continue;
            const int chi = arith::kronecker(8 * d, n);
            if (chi == 0) continue;
            const double pv = phi(static_cast<double>(n) / yscale);
            if (pv == 0.0) continue;
            if (mu * chi > 0)
                s += pv;
            else
                s -= pv;
        }
        return s;
    };
    return chunked_weighted_square_sum(dwin, X, w, tables, 1, inner);
}

double main_term(double X, double Y, const weights::BumpWeight& w, const weights::BumpWeight& phi,
                 const weights::QuadratureSpec& spec, std::int64_t prime_limit, H1Form form) {
    const double h1 = form == H1Form::diagonal ? weights::h1_tilde_diagonal(w, phi, spec)
                                               : weights::h1_tilde_11(w, phi, spec);
    const double z2 = dirichlet::z2_at(1.0, prime_limit).value;
    const double c = 4.0 / (std::numbers::pi * std::numbers::pi) * Y * h1 * z2;
    return c * X;  // X multiplied last: doubling X scales the result exactly
}

void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& os, const MeanSquareRow& r) {
    os << io::shortest(r.X) << ',' << io::shortest(r.Y) << ',' << io::shortest(r.s_empirical)
       << ',' << io::shortest(r.s_predicted) << ',' << io::shortest(r.ratio) << ',' << r.d_count
       << ',' << io::shortest(r.runtime_seconds) << '\n';
}

std::vector<MeanSquareRow> run_experiment(const ExperimentPlan& plan, std::ostream* csv_out,
                                          std::vector<std::string>* errors_out) {
    std::vector<MeanSquareRow> rows;
    if (csv_out) write_csv_header(*csv_out);
    if (plan.X_values.empty()) return rows;

    std::vector<double> xs = plan.X_values;
    std::sort(xs.begin(), xs.end());

    auto y_of = [&plan](double X) {
        return plan.y_is_power ? std::pow(X, plan.y_value) : plan.y_value;
    };

    // One sieve covering every row.
    std::int64_t limit = 1;
    for (double X : xs) {
        const double ys = plan.inner_scale == InnerScale::Y ? y_of(X) : X;
        limit = std::max<std::int64_t>(limit,
                                       static_cast<std::int64_t>(std::ceil(plan.w.right() * X)));
        limit = std::max<std::int64_t>(
            limit, static_cast<std::int64_t>(std::ceil(plan.phi.right() * ys)));
    }
    const arith::MobiusTable tables = arith::sieve_mobius(limit);

    for (double X : xs) {
        try {
            const double Y = y_of(X);
            MeanSquareRow row;
            row.X = X;
            row.Y = Y;
            const auto t0 = std::chrono::steady_clock::now();
            const BruteForceResult bf = brute_force_S(
                X, Y, plan.w, plan.phi, tables, EngineOptions{plan.threads, plan.inner_scale});
            const auto t1 = std::chrono::steady_clock::now();
            row.s_empirical = bf.s;
            row.d_count = bf.d_count;
            row.runtime_seconds = std::chrono::duration<double>(t1 - t0).count();
            row.s_predicted =
                main_term(X, Y, plan.w, plan.phi, plan.quadrature, plan.prime_limit, plan.h1_form);
            row.ratio = row.s_empirical / row.s_predicted;
            rows.push_back(row);
            if (csv_out) {
                write_csv_row(*csv_out, row);
                csv_out->flush();
            }
        } catch (const std::exception& e) {
            if (errors_out)
                errors_out->push_back("X=" + io::shortest(X) + ": " + e.what());
        }
    }
    return rows;
}

}  // namespace qtl::meansquare
