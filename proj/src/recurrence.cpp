#include "gfc/recurrence.hpp"

#include <algorithm>

#include "gfc/errors.hpp"

namespace gfc {

Recurrence extract_ttrr(const PolySeq& ps) {
    const int N = ps.order();
    if (N < 2) throw OrderTooSmall("extract_ttrr needs order >= 2");

    Recurrence rec;
    for (int n = 0; n <= N - 1; ++n) {
        Poly q = ps.at(n).shifted_up(1) - ps.at(n + 1);
        Rational beta = q.coeff(n);
        q -= ps.at(n) * beta;
        rec.betas.push_back(beta);
        if (n == 0)
            rec.omegas.push_back(Rational(0));
        else {
            Rational omega = q.coeff(n - 1);
            q -= ps.at(n - 1) * omega;
            rec.omegas.push_back(omega);
        }
        if (!q.is_zero()) {
            rec.failure = TtrrFailure{n, std::move(q)};
            rec.valid_to = n - 1;
            return rec;
        }
    }
    rec.valid_to = N - 1;
    return rec;
}

GeneralRecurrence extract_general(const PolySeq& ps, int d) {
    if (d < 0) throw OrderTooSmall("extract_general needs d >= 0");
    const int N = ps.order();
    if (N < d + 1) throw OrderTooSmall("extract_general needs order >= d+1");

    GeneralRecurrence rec;
    rec.d = d;
    for (int n = 0; n <= N - 1; ++n) {
        Poly q = ps.at(n).shifted_up(1) - ps.at(n + 1);
        std::vector<Rational> row;
        for (int l = 0; l <= std::min(d, n); ++l) {
            Rational g = q.coeff(n - l);
            q -= ps.at(n - l) * g;
            row.push_back(std::move(g));
        }
        rec.gammas.push_back(std::move(row));
        if (!q.is_zero()) {
            rec.failure = TtrrFailure{n, std::move(q)};
            rec.valid_to = n - 1;
            return rec;
        }
    }
    rec.valid_to = N - 1;
    return rec;
}

std::optional<int> minimal_order(const PolySeq& ps, int d_max) {
    if (d_max < 1) throw OrderTooSmall("minimal_order needs d_max >= 1");
    for (int d = 1; d <= d_max; ++d) {
        if (ps.order() < d + 1) break;
        if (extract_general(ps, d).passed()) return d;
    }
    return std::nullopt;
}

DerivedSequences derived_sequences(const GenFunSpec& spec, const Recurrence& rec) {
    const int N = spec.order();
    if (spec.alpha(1).is_zero() || spec.r(2).is_zero())
        throw Error("derived sequences need alpha_1 R_2 != 0");

    DerivedSequences ds;
    const Rational half_t1 = spec.r(2) / Rational(2);
    ds.a.reserve(static_cast<size_t>(N));
    for (int n = 0; n <= N - 1; ++n) {
        if (spec.alpha(n + 1).is_zero()) throw ZeroAlpha(n + 1);
        ds.a.push_back(half_t1 * spec.alpha(n) / spec.alpha(n + 1));
    }
    ds.c.push_back(Rational(0));
    for (int n = 1; n <= rec.valid_to && n < static_cast<int>(rec.omegas.size()); ++n)
        ds.c.push_back(spec.alpha(n) / spec.alpha(n - 1) * rec.omegas[static_cast<size_t>(n)]);
    ds.t.push_back(Rational(0));
    for (int k = 1; 2 * k <= N; ++k) ds.t.push_back(spec.r(2 * k));
    return ds;
}

}  // namespace gfc
