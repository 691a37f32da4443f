#include "rnaforge/fold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rnaforge/errors.hpp"

namespace rnaforge {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Interval DP over three quantities per cell:
//   V(i,j)  — (i,j) paired; includes the pair term and, when the interior
//             carries the full-span pair (i+1,j-1), the stack bonus.
//   Wx(i,j) — any structure on [i,j] that does NOT pair i with j.
//   W(i,j)  — unconstrained; W = Wx (+ V when (i,j) can pair).
// The decomposition is by the fate of the first position, so every
// structure is derived exactly once and the same tables serve min-plus
// (MFE), counting, and sum-product (partition function) semantics.
class FoldDP {
  public:
    FoldDP(const Sequence& x, const EnergyParams& p)
        : n_(x.length()), hmin_(p.h_min), params_(p) {
        codes_.resize(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) codes_[static_cast<size_t>(i)] = x.code_at(i);
        run_inside();
    }

    int mfe_value() const { return n_ > 0 ? static_cast<int>(w_at(0, n_ - 1)) : 0; }
    const BigInt& mfe_count() const { return cw_[idx(0, n_ - 1)]; }
    double partition() const { return n_ > 0 ? zw_at(0, n_ - 1) : 1.0; }

    Structure traceback() const;
    PairProbs pair_probabilities();

  private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

    bool can_pair(int i, int j) const {
        return j - i > hmin_ && pairable(codes_[static_cast<size_t>(i)], codes_[static_cast<size_t>(j)]);
    }
    int pair_e(int i, int j) const {
        return params_.e_pair[codes_[static_cast<size_t>(i)]][codes_[static_cast<size_t>(j)]];
    }
    double pair_w(int i, int j) const {
        return std::exp(-static_cast<double>(pair_e(i, j)) / params_.rt_deci);
    }
    double stack_w() const { return std::exp(-static_cast<double>(params_.e_stack) / params_.rt_deci); }

    // empty intervals contribute the neutral element
    long long w_at(int i, int j) const { return i > j ? 0 : w_[idx(i, j)]; }
    long long v_at(int i, int j) const { return v_[idx(i, j)]; }
    const BigInt& cw_at(int i, int j) const {
        static const BigInt one = 1;
        return i > j ? one : cw_[idx(i, j)];
    }
    double zw_at(int i, int j) const { return i > j ? 1.0 : zw_[idx(i, j)]; }

    void run_inside();
    void run_outside();
    void trace_interval(int i, int j, long long target, Structure& out) const;
    void trace_pair(int i, int j, Structure& out) const;

    int n_;
    int hmin_;
    EnergyParams params_;
    std::vector<int> codes_;

    // min-plus with co-optimal counts
    std::vector<long long> v_, wx_, w_;
    std::vector<BigInt> cv_, cwx_, cw_;
    // sum-product (Boltzmann weights)
    std::vector<double> zv_, zwx_, zw_;
    // outside
    std::vector<double> ov_, owx_, ow_;
};

void FoldDP::run_inside() {
    if (n_ == 0) return;
    size_t cells = static_cast<size_t>(n_) * n_;
    v_.assign(cells, kInf);
    wx_.assign(cells, 0);
    w_.assign(cells, 0);
    cv_.assign(cells, 0);
    cwx_.assign(cells, 0);
    cw_.assign(cells, 0);
    zv_.assign(cells, 0.0);
    zwx_.assign(cells, 0.0);
    zw_.assign(cells, 0.0);

    const double ws = stack_w();
    for (int span = 1; span <= n_; ++span) {
        for (int i = 0; i + span - 1 < n_; ++i) {
            const int j = i + span - 1;
            const size_t c = idx(i, j);

            if (can_pair(i, j)) {
                const int a = i + 1, b = j - 1;
                const long long ep = pair_e(i, j);
                const double wp = pair_w(i, j);
                if (a > b) {
                    v_[c] = ep;
                    cv_[c] = 1;
                    zv_[c] = wp;
                } else {
                    const size_t ci = idx(a, b);
                    long long best = wx_[ci];
                    BigInt cnt = cwx_[ci];
                    double z = zwx_[ci];
                    if (v_[ci] < kInf) {
                        long long stacked = v_[ci] + params_.e_stack;
                        if (stacked < best) {
                            best = stacked;
                            cnt = cv_[ci];
                        } else if (stacked == best) {
                            cnt += cv_[ci];
                        }
                        z += ws * zv_[ci];
                    }
                    v_[c] = ep + best;
                    cv_[c] = cnt;
                    zv_[c] = wp * z;
                }
            }

            // Wx: i unpaired, or i paired to k < j
            long long best = w_at(i + 1, j);
            BigInt cnt = cw_at(i + 1, j);
            double z = zw_at(i + 1, j);
            for (int k = i + hmin_ + 1; k < j; ++k) {
                if (!can_pair(i, k)) continue;
                long long cand = v_[idx(i, k)] + w_[idx(k + 1, j)];
                if (cand < best) {
                    best = cand;
                    cnt = cv_[idx(i, k)] * cw_[idx(k + 1, j)];
                } else if (cand == best) {
                    cnt += cv_[idx(i, k)] * cw_[idx(k + 1, j)];
                }
                z += zv_[idx(i, k)] * zw_[idx(k + 1, j)];
            }
            wx_[c] = best;
            cwx_[c] = cnt;
            zwx_[c] = z;

            // W: Wx plus the full-span pair
            w_[c] = best;
            cw_[c] = cnt;
            zw_[c] = z;
            if (v_[c] < kInf) {
                if (v_[c] < w_[c]) {
                    w_[c] = v_[c];
                    cw_[c] = cv_[c];
                } else if (v_[c] == w_[c]) {
                    cw_[c] += cv_[c];
                }
                zw_[c] += zv_[c];
            }
        }
    }

    if (!std::isfinite(zw_[idx(0, n_ - 1)]) || !(zw_[idx(0, n_ - 1)] > 0.0))
        throw Error(ErrorCode::EvaluationFailed, "partition function not finite/positive");
}

// Deterministic MFE representative: scanning left to right, prefer pairing
// the current position (smallest partner first) over leaving it unpaired.
void FoldDP::trace_interval(int i, int j, long long target, Structure& out) const {
    while (i <= j) {
        bool paired = false;
        for (int k = i + hmin_ + 1; k <= j; ++k) {
            if (!can_pair(i, k)) continue;
            long long cand = v_[idx(i, k)] + w_at(k + 1, j);
            if (cand == target) {
                trace_pair(i, k, out);
                target -= v_[idx(i, k)];
                i = k + 1;
                paired = true;
                break;
            }
        }
        if (!paired) {
            // i stays unpaired; target is unchanged by construction
            ++i;
        }
    }
}

void FoldDP::trace_pair(int i, int j, Structure& out) const {
    out.text[static_cast<size_t>(i)] = '(';
    out.text[static_cast<size_t>(j)] = ')';
    out.partner[static_cast<size_t>(i)] = j;
    out.partner[static_cast<size_t>(j)] = i;
    out.pairs.emplace_back(i, j);

    const int a = i + 1, b = j - 1;
    if (a > b) return;
    const long long inner = v_[idx(i, j)] - pair_e(i, j);
    // interior pairings of position a first (k == b carries the stack bonus)
    for (int k = a + hmin_ + 1; k <= b; ++k) {
        if (!can_pair(a, k)) continue;
        const long long bonus = (k == b) ? params_.e_stack : 0;
        if (v_[idx(a, k)] + w_at(k + 1, b) + bonus == inner) {
            trace_pair(a, k, out);
            if (k < b) trace_interval(k + 1, b, w_at(k + 1, b), out);
            return;
        }
    }
    // a unpaired; the rest of the interior can no longer stack with (i,j)
    trace_interval(a + 1, b, w_at(a + 1, b), out);
}

Structure FoldDP::traceback() const {
    Structure out;
    out.text.assign(static_cast<size_t>(n_), '.');
    out.partner.assign(static_cast<size_t>(n_), -1);
    if (n_ > 0) trace_interval(0, n_ - 1, w_at(0, n_ - 1), out);
    std::sort(out.pairs.begin(), out.pairs.end());
    for (int i = 0; i < n_; ++i)
        if (out.partner[static_cast<size_t>(i)] < 0) out.unpaired.push_back(i);
    return out;
}

void FoldDP::run_outside() {
    size_t cells = static_cast<size_t>(n_) * n_;
    ov_.assign(cells, 0.0);
    owx_.assign(cells, 0.0);
    ow_.assign(cells, 0.0);
    ow_[idx(0, n_ - 1)] = 1.0;

    for (int span = n_; span >= 1; --span) {
        for (int i = 0; i + span - 1 < n_; ++i) {
            const int j = i + span - 1;
            const size_t c = idx(i, j);
            const bool has_v = v_[c] < kInf;

            owx_[c] += ow_[c];
            if (has_v) ov_[c] += ow_[c];

            const double ox = owx_[c];
            if (ox != 0.0) {
                if (i + 1 <= j) ow_[idx(i + 1, j)] += ox;
                for (int k = i + hmin_ + 1; k < j; ++k) {
                    if (!can_pair(i, k)) continue;
                    ov_[idx(i, k)] += ox * zw_[idx(k + 1, j)];
                    ow_[idx(k + 1, j)] += ox * zv_[idx(i, k)];
                }
            }
            if (has_v && ov_[c] != 0.0) {
                const int a = i + 1, b = j - 1;
                if (a <= b) {
                    const double wp = pair_w(i, j);
                    if (v_[idx(a, b)] < kInf) ov_[idx(a, b)] += ov_[c] * wp * stack_w();
                    owx_[idx(a, b)] += ov_[c] * wp;
                }
            }
        }
    }
}

PairProbs FoldDP::pair_probabilities() {
    PairProbs out;
    out.n = n_;
    out.p.assign(static_cast<size_t>(n_) * n_, 0.0);
    out.q.assign(static_cast<size_t>(n_), 1.0);
    if (n_ == 0) return out;
    run_outside();
    const double q_total = zw_[idx(0, n_ - 1)];
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (!can_pair(i, j)) continue;
            double pij = zv_[idx(i, j)] * ov_[idx(i, j)] / q_total;
            if (!std::isfinite(pij))
                throw Error(ErrorCode::EvaluationFailed, "non-finite pair probability");
            out.p[idx(i, j)] = pij;
            out.p[idx(j, i)] = pij;
        }
    }
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += out.p[idx(i, j)];
        out.q[static_cast<size_t>(i)] = 1.0 - s;
    }
    return out;
}

void enumerate_rec(int n, int h_min, std::string& buf, std::vector<int>& stack, int pos,
                   std::vector<Structure>& out) {
    if (pos == n) {
        if (stack.empty()) out.push_back(parse_structure(buf, h_min));
        return;
    }
    const int remaining_after = n - pos - 1;
    const int depth = static_cast<int>(stack.size());
    // '(' < ')' < '.' in ASCII, so this emits lexicographically
    if (remaining_after >= depth + 1) {
        buf[static_cast<size_t>(pos)] = '(';
        stack.push_back(pos);
        enumerate_rec(n, h_min, buf, stack, pos + 1, out);
        stack.pop_back();
    }
    if (depth > 0 && pos - stack.back() > h_min) {
        buf[static_cast<size_t>(pos)] = ')';
        int saved = stack.back();
        stack.pop_back();
        enumerate_rec(n, h_min, buf, stack, pos + 1, out);
        stack.push_back(saved);
    }
    if (remaining_after >= depth) {
        buf[static_cast<size_t>(pos)] = '.';
        enumerate_rec(n, h_min, buf, stack, pos + 1, out);
    }
}

}  // namespace

std::vector<Structure> enumerate_structures(int n, int h_min) {
    if (n > 18) throw Error(ErrorCode::TooLong, "enumeration guarded at n <= 18");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
    std::vector<Structure> out;
    std::string buf(static_cast<size_t>(n), '.');
    std::vector<int> stack;
    enumerate_rec(n, h_min, buf, stack, 0, out);
    return out;
}

std::pair<int, Structure> mfe(const Sequence& x, const EnergyParams& p) {
    if (x.length() < 1) throw Error(ErrorCode::InvalidArgument, "empty sequence");
    FoldDP dp(x, p);
    return {dp.mfe_value(), dp.traceback()};
}

BigInt count_mfe(const Sequence& x, const EnergyParams& p) {
    FoldDP dp(x, p);
    return dp.mfe_count();
}

double partition_function(const Sequence& x, const EnergyParams& p) {
    FoldDP dp(x, p);
    return dp.partition();
}

double boltzmann_prob(const Sequence& x, const Structure& y, const EnergyParams& p) {
    if (!is_valid_design(x, y))
        throw Error(ErrorCode::InvalidDesign, "sequence is not a valid design for the target");
    FoldDP dp(x, p);
    const int e = energy(x, y, p);
    double prob = std::exp(-static_cast<double>(e) / p.rt_deci - std::log(dp.partition()));
    if (!std::isfinite(prob))
        throw Error(ErrorCode::EvaluationFailed, "non-finite Boltzmann probability");
    return prob;
}

PairProbs pair_probabilities(const Sequence& x, const EnergyParams& p) {
    FoldDP dp(x, p);
    return dp.pair_probabilities();
}

double ned(const Sequence& x, const Structure& y, const EnergyParams& p) {
    if (!is_valid_design(x, y))
        throw Error(ErrorCode::InvalidDesign, "sequence is not a valid design for the target");
    FoldDP dp(x, p);
    PairProbs probs = dp.pair_probabilities();
    double acc = 0.0;
    for (const auto& [i, j] : y.pairs) acc += 2.0 * probs.pair(i, j);
    for (int i : y.unpaired) acc += probs.q[static_cast<size_t>(i)];
    return 1.0 - acc / static_cast<double>(y.length());
}

DesignEval fold_summary(const Sequence& x, const Structure& y, const EnergyParams& p) {
    if (!is_valid_design(x, y))
        throw Error(ErrorCode::InvalidDesign, "sequence is not a valid design for the target");
    FoldDP dp(x, p);
    DesignEval ev;
    ev.summary.mfe_value = dp.mfe_value();
    ev.summary.mfe_count = dp.mfe_count();
    ev.summary.mfe_structure = dp.traceback();
    ev.summary.q = dp.partition();
    ev.summary.probs = dp.pair_probabilities();

    const int e = energy(x, y, p);
    ev.prob = std::exp(-static_cast<double>(e) / p.rt_deci - std::log(ev.summary.q));
    if (!std::isfinite(ev.prob))
        throw Error(ErrorCode::EvaluationFailed, "non-finite Boltzmann probability");
    double acc = 0.0;
    for (const auto& [i, j] : y.pairs) acc += 2.0 * ev.summary.probs.pair(i, j);
    for (int i : y.unpaired) acc += ev.summary.probs.q[static_cast<size_t>(i)];
    ev.ned = 1.0 - acc / static_cast<double>(y.length());
    ev.is_mfe = (e == ev.summary.mfe_value);
    ev.is_umfe = ev.is_mfe && ev.summary.mfe_count == 1;
    return ev;
}

}  // namespace rnaforge
