#include "morse_bridge/smith.hpp"

#include <cstdlib>
#include <utility>

#include "morse_bridge/errors.hpp"

namespace morse_bridge {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in Smith normal form");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in Smith normal form");
    return r;
}

class Reducer {
public:
    explicit Reducer(const IntMatrix& A)
        : D(A), P(IntMatrix::Identity(A.rows(), A.rows())), P_inv(P),
          Q(IntMatrix::Identity(A.cols(), A.cols())), Q_inv(Q)
    {
    }

    // row_i += k * row_j
    void add_row(Eigen::Index i, Eigen::Index j, std::int64_t k)
    {
        for (Eigen::Index c = 0; c < D.cols(); ++c)
            D(i, c) = checked_add(D(i, c), checked_mul(k, D(j, c)));
        for (Eigen::Index c = 0; c < P.cols(); ++c)
            P(i, c) = checked_add(P(i, c), checked_mul(k, P(j, c)));
        for (Eigen::Index r = 0; r < P_inv.rows(); ++r)
            P_inv(r, j) = checked_add(P_inv(r, j), checked_mul(-k, P_inv(r, i)));
    }

    // col_i += k * col_j
    void add_col(Eigen::Index i, Eigen::Index j, std::int64_t k)
    {
        for (Eigen::Index r = 0; r < D.rows(); ++r)
            D(r, i) = checked_add(D(r, i), checked_mul(k, D(r, j)));
        for (Eigen::Index r = 0; r < Q.rows(); ++r)
            Q(r, i) = checked_add(Q(r, i), checked_mul(k, Q(r, j)));
        for (Eigen::Index c = 0; c < Q_inv.cols(); ++c)
            Q_inv(j, c) = checked_add(Q_inv(j, c), checked_mul(-k, Q_inv(i, c)));
    }

    void swap_rows(Eigen::Index i, Eigen::Index j)
    {
        if (i == j)
            return;
        D.row(i).swap(D.row(j));
        P.row(i).swap(P.row(j));
        P_inv.col(i).swap(P_inv.col(j));
    }

    void swap_cols(Eigen::Index i, Eigen::Index j)
    {
        if (i == j)
            return;
        D.col(i).swap(D.col(j));
        Q.col(i).swap(Q.col(j));
        Q_inv.row(i).swap(Q_inv.row(j));
    }

    void negate_row(Eigen::Index i)
    {
        D.row(i) *= -1;
        P.row(i) *= -1;
        P_inv.col(i) *= -1;
    }

    // Smallest non-zero |entry| in the block [t:, t:]; false if all zero.
    bool find_pivot(Eigen::Index t, Eigen::Index& pr, Eigen::Index& pc) const
    {
        std::int64_t best = 0;
        for (Eigen::Index r = t; r < D.rows(); ++r)
            for (Eigen::Index c = t; c < D.cols(); ++c) {
                const std::int64_t v = std::llabs(D(r, c));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        return best != 0;
    }

    void reduce()
    {
        const Eigen::Index limit = std::min(D.rows(), D.cols());
        for (Eigen::Index t = 0; t < limit; ++t) {
            Eigen::Index pr = t, pc = t;
            if (!find_pivot(t, pr, pc)) {
                rank = t;
                return;
            }
            swap_rows(t, pr);
            swap_cols(t, pc);
            for (;;) {
                bool dirty = false;
                for (Eigen::Index r = t + 1; r < D.rows(); ++r) {
                    if (D(r, t) == 0)
                        continue;
                    add_row(r, t, -(D(r, t) / D(t, t)));
                    if (D(r, t) != 0) {
                        swap_rows(t, r);
                        dirty = true;
                    }
                }
                for (Eigen::Index c = t + 1; c < D.cols(); ++c) {
                    if (D(t, c) == 0)
                        continue;
                    add_col(c, t, -(D(t, c) / D(t, t)));
                    if (D(t, c) != 0) {
                        swap_cols(t, c);
                        dirty = true;
                    }
                }
                if (dirty)
                    continue;
                // Divisibility of the remaining block.
                Eigen::Index bad_row = -1;
                for (Eigen::Index r = t + 1; r < D.rows() && bad_row < 0; ++r)
                    for (Eigen::Index c = t + 1; c < D.cols(); ++c)
                        if (D(r, c) % D(t, t) != 0) {
                            bad_row = r;
                            break;
                        }
                if (bad_row < 0)
                    break;
                add_row(t, bad_row, 1);
            }
            if (D(t, t) < 0)
                negate_row(t);
        }
        rank = limit;
    }

    IntMatrix D, P, P_inv, Q, Q_inv;
    Eigen::Index rank = 0;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A)
{
    Reducer red(A);
    red.reduce();
    return SmithForm{std::move(red.D), std::move(red.P), std::move(red.P_inv), std::move(red.Q),
                     std::move(red.Q_inv), red.rank};
}

}  // namespace morse_bridge
