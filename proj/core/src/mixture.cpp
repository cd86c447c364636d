#include "qsc/mixture.hpp"

#include <stdexcept>

namespace qsc {

namespace {

rational pow_rational(const rational& x, int m) {
    if (m < 0) throw std::invalid_argument("negative power");
    rational acc = 1;
    rational base = x;
    int e = m;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace

OrthogonalMixture::OrthogonalMixture(std::vector<rational> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("empty mixture");
}

rational OrthogonalMixture::trace() const {
    rational s = 0;
    for (const rational& c : weights_) s += c;
    return s;
}

rational OrthogonalMixture::hs_norm_sq() const {
    rational s = 0;
    for (const rational& c : weights_) s += c * c;
    return s;
}

rational OrthogonalMixture::abs_sum() const {
    rational s = 0;
    for (const rational& c : weights_) s += c < 0 ? rational(-c) : c;
    return s;
}

std::vector<rational> OrthogonalMixture::power_weights(int m) const {
    std::vector<rational> out;
    out.reserve(weights_.size());
    for (const rational& c : weights_) out.push_back(pow_rational(c, m));
    return out;
}

rational OrthogonalMixture::binomial_weight_sum(int m) const {
    rational s = 0;
    for (const rational& c : weights_) s += c * pow_rational(rational(1) - c, m);
    return s;
}

std::vector<rational> OrthogonalMixture::binomial_weight_sums(int n_max) const {
    std::vector<rational> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    // incremental products avoid re-exponentiating per m
    std::vector<rational> comp(weights_.size());
    std::vector<rational> cur(weights_.begin(), weights_.end());
    for (std::size_t i = 0; i < weights_.size(); ++i) comp[i] = rational(1) - weights_[i];
    for (int m = 0; m <= n_max; ++m) {
        rational s = 0;
        for (const rational& v : cur) s += v;
        out.push_back(s);
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] *= comp[i];
    }
    return out;
}

bool OrthogonalMixture::is_state() const {
    if (trace() != 1) return false;
    for (const rational& c : weights_)
        if (c < 0) return false;
    return true;
}

bool OrthogonalMixture::is_pure() const {
    int ones = 0;
    for (const rational& c : weights_) {
        if (c == 1) ++ones;
        else if (c != 0) return false;
    }
    return ones == 1;
}

std::vector<CriterionReport> mixture_phase_criteria(const OrthogonalMixture& mix, int m_max) {
    const std::vector<rational>& w = mix.weights();

    long modes = 0;
    bool any_negative = false;
    bool limit_is_zero = true; // sum c (1-c)^m -> 0 iff every weight is in [0, 2)
    for (const rational& c : w) {
        if (c != 0) ++modes;
        if (c < 0) any_negative = true;
        if (c < 0 || c >= 2) limit_is_zero = false;
    }

    std::vector<CriterionReport> out;

    {
        CriterionReport r;
        r.id = CriterionId::W_TRACE_SQRT;
        const rational s = mix.abs_sum();
        const bool ok = s == 1;
        r.verdict = ok ? Verdict::accept : Verdict::reject;
        r.detail = ok ? "sum of |modes| equals the trace"
                      : "sum of |modes| differs from the trace";
        r.checks.push_back({"trace_sum", s.convert_to<double>(), ok});
        r.checks.push_back({"mode_count", static_cast<double>(modes), true});
        out.push_back(std::move(r));
    }
    {
        CriterionReport r;
        r.id = CriterionId::W_BINOMIAL;
        const std::vector<rational> t = mix.binomial_weight_sums(m_max);
        int witness = -1;
        for (int m = 0; m <= m_max && witness < 0; ++m)
            if (t[static_cast<std::size_t>(m)] < 0) witness = m;
        if (witness >= 0) {
            r.verdict = Verdict::reject;
            r.detail = "negative weight sum at m = " + std::to_string(witness);
            r.checks.push_back({"first_negative_sum",
                                t[static_cast<std::size_t>(witness)].convert_to<double>(),
                                false});
        } else {
            r.verdict = Verdict::accept;
            r.detail = "all weight sums nonnegative";
            rational mn = t.empty() ? rational(0) : t[0];
            for (const rational& v : t)
                if (v < mn) mn = v;
            r.checks.push_back({"min_weight_sum", mn.convert_to<double>(), true});
        }
        r.checks.push_back({"depth", static_cast<double>(m_max), true});
        out.push_back(std::move(r));
    }
    {
        CriterionReport r;
        r.id = CriterionId::W_LIMIT;
        r.verdict = limit_is_zero ? Verdict::accept : Verdict::reject;
        if (limit_is_zero) r.detail = "weight sums decay to 0";
        else if (any_negative) r.detail = "weight sums head below 0 instead of to 0";
        else r.detail = "weight sums oscillate without bound";
        r.checks.push_back({"s_at_n_max",
                            mix.binomial_weight_sum(m_max).convert_to<double>(),
                            limit_is_zero});
        out.push_back(std::move(r));
    }
    {
        CriterionReport r;
        r.id = CriterionId::W_PURE;
        const bool pure = mix.is_pure();
        rational defect = 0; // max |c^2 - c|, zero exactly for projector weights
        for (const rational& c : w) {
            rational d = c * c - c;
            if (d < 0) d = -d;
            if (d > defect) defect = d;
        }
        rational tdev = mix.trace() - 1;
        if (tdev < 0) tdev = -tdev;
        r.verdict = pure ? Verdict::accept : Verdict::reject;
        r.detail = pure ? "single unit weight" : "not a single unit weight";
        r.checks.push_back({"idempotency_defect", defect.convert_to<double>(), defect == 0});
        r.checks.push_back({"trace_deviation", tdev.convert_to<double>(), tdev == 0});
        out.push_back(std::move(r));
    }
    return out;
}

rational sqrt_coeff_exact(int l) {
    if (l < 1) throw std::invalid_argument("series starts at l = 1");
    rational c(1, 2);
    for (int k = 1; k < l; ++k) c *= rational(-(2 * k - 1), 2 * k + 2);
    return c;
}

rational sqrt_abs_tail_exact(int L) {
    rational c(1, 2);
    rational s = c;
    for (int k = 1; k < L; ++k) {
        c *= rational(-(2 * k - 1), 2 * k + 2);
        s += c < 0 ? rational(-c) : c;
    }
    return L >= 1 ? rational(1) - s : rational(1);
}

rational sqrt_trace_partial_exact(const OrthogonalMixture& mix, int L) {
    const std::vector<rational>& w = mix.weights();
    std::vector<rational> shifted(w.size()); // c_i^2 - 1
    std::vector<rational> pw(w.size(), rational(1));
    for (std::size_t i = 0; i < w.size(); ++i) shifted[i] = w[i] * w[i] - 1;

    rational sum = 0;
    rational coeff(1, 2);
    int parity = -1; // (-1)^l starting at l = 1
    for (int l = 1; l <= L; ++l) {
        rational inner = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            pw[i] *= shifted[i];
            inner += pw[i] - parity;
        }
        sum += coeff * inner;
        coeff *= rational(-(2 * l - 1), 2 * l + 2);
        parity = -parity;
    }
    return sum;
}

} // namespace qsc
