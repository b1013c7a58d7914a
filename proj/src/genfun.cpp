#include "parkfun/genfun.hpp"

#include <json.hpp>

#include <utility>
#include <vector>

namespace parkfun {

namespace {

using Rat = ExactRational;

const Exp kX = {1, 0, 0};
const Exp kY = {0, 1, 0};
const Exp kZ = {0, 0, 1};

RatSeries constant(Exp caps, Rat v) { return RatSeries::constant(caps, std::move(v)); }

/* Monomial that is silently zero when it falls outside caps (sound: its
   mass lies beyond the tracked rectangle). */
RatSeries mono(Exp caps, Exp e, Rat v) {
    RatSeries s(caps);
    s.add_term(e, std::move(v));
    return s;
}

RatSeries shift_x(const RatSeries& s, int power, Rat coeff, const Exp& caps) {
    return ts_truncate(ts_mul_monomial(s, {power, 0, 0}, std::move(coeff)), caps);
}

void add_slice(RatSeries& target, const RatSeries& slice, int ypow, int zpow) {
    for (const auto& [e, c] : slice.terms())
        target.add_term({e[0], e[1] + ypow, e[2] + zpow}, c);
}

/* R_k by the stepping recurrence; index k up to kmax. */
std::vector<RatSeries> r_slices(int nx, int kmax) {
    const Exp ux = {nx, 0, 0};
    RatSeries P = p_series<Rat>(ux, 0, 1);
    std::vector<RatSeries> R;
    R.push_back(P);
    if (kmax >= 1) {
        RatSeries one_minus_x = constant(ux, 1) - mono(ux, kX, 1);
        R.push_back(ts_mul(one_minus_x, P) - constant(ux, 1));
    }
    for (int k = 1; k + 1 <= kmax; ++k) {
        RatSeries next = R[k];
        Rat inv_fact = 1;
        for (int i = 1; i <= k + 1; ++i) {
            inv_fact /= i;
            next = next - shift_x(R[k + 1 - i], i, inv_fact, ux);
        }
        R.push_back(std::move(next));
    }
    return R;
}

std::vector<RatSeries> h_slices(int nx, int kmax) {
    const Exp ux = {nx, 0, 0};
    RatSeries P = p_series<Rat>(ux, 0, 1);
    std::vector<RatSeries> H;
    H.push_back(shift_x(P, 1, 1, ux) + constant(ux, 1)); // H_0 = xP + 1
    if (kmax >= 1) {
        RatSeries x_half_sq = mono(ux, kX, 1) - mono(ux, {2, 0, 0}, Rat(1) / 2);
        H.push_back(ts_mul(P, x_half_sq) - mono(ux, kX, 1)); // H_1 = P(x - x^2/2) - x
    }
    for (int k = 2; k <= kmax; ++k) {
        RatSeries next = H[k - 1] + shift_x(P, k + 1, Rat(1) / Rat(factorial(k + 1)), ux);
        Rat inv_fact = 1;
        for (int i = 1; i <= k; ++i) {
            inv_fact /= i;
            next = next - shift_x(H[k - i], i, inv_fact, ux);
        }
        H.push_back(std::move(next));
    }
    return H;
}

std::vector<RatSeries> t_slices(int nx, int kmax) {
    const Exp ux = {nx, 0, 0};
    RatSeries P = p_series<Rat>(ux, 0, 1);
    std::vector<RatSeries> T;
    T.push_back(shift_x(P, 1, 1, ux)); // T_0 = xP
    for (int k = 1; k <= kmax; ++k) {
        Rat grow = rat_pow(k + 1, k - 1) / Rat(factorial(k));
        Rat drop = 2 * rat_pow(k + 1, k - 2) / Rat(factorial(k - 1));
        T.push_back(T[k - 1] + shift_x(P, k + 1, grow, ux) - mono(ux, {k, 0, 0}, drop));
    }
    return T;
}

Rat alt_coeff(int k, int i) { // (-1)^i (k+1-i)^i / i!
    Rat c = Rat(ipow(k + 1 - i, static_cast<unsigned long>(i))) / Rat(factorial(i));
    return (i % 2 == 0) ? c : -c;
}

RatSeries t_closed(int nx, int ny) {
    const Exp c2 = {nx, ny, 0};
    RatSeries P2 = p_series<Rat>(c2, 0, 1);
    RatSeries Pxy = ts_subst(P2, 0, Rat(1), {1, 1, 0});
    RatSeries yPxy = ts_truncate(ts_mul_monomial(Pxy, kY), c2);
    RatSeries inner = ts_mul(Pxy, P2 - yPxy);
    RatSeries x_inner = ts_truncate(ts_mul_monomial(inner, kX), c2);
    RatSeries one_minus_y = constant(c2, 1) - mono(c2, kY, 1);
    return ts_mul(x_inner, ts_reciprocal(one_minus_y));
}

/* The F and D families only carry slices with s >= k. Their rational
   closed forms reproduce the slice sums exactly on that support but are
   not zero below the diagonal, so the builders restrict to it. */
RatSeries keep_y_ge_z(const RatSeries& a) {
    RatSeries out(a.caps());
    for (const auto& [e, c] : a.terms())
        if (e[1] >= e[2])
            out.add_term(e, c);
    return out;
}

RatSeries f_closed(int nx, int ny, int nz) {
    const Exp c3 = {nx, ny, nz};
    RatSeries T3 = ts_extend(t_closed(nx, ny), c3);
    RatSeries Tyz = ts_subst(T3, 1, Rat(1), {0, 1, 1});
    RatSeries zTyz = ts_truncate(ts_mul_monomial(Tyz, kZ), c3);
    RatSeries e_xyz = ts_exp(mono(c3, {1, 1, 1}, 1));
    RatSeries z = mono(c3, kZ, 1);
    return keep_y_ge_z(ts_mul(T3 - zTyz, ts_reciprocal(e_xyz - z)));
}

} // namespace

const char* gf_name_string(GfName name) {
    switch (name) {
    case GfName::P: return "P";
    case GfName::Q: return "Q";
    case GfName::R: return "R";
    case GfName::H: return "H";
    case GfName::L: return "L";
    case GfName::T: return "T";
    case GfName::F: return "F";
    case GfName::D: return "D";
    }
    return "?";
}

int gf_arity(GfName name) {
    switch (name) {
    case GfName::P:
    case GfName::L: return 1;
    case GfName::Q:
    case GfName::R:
    case GfName::H:
    case GfName::T: return 2;
    case GfName::F:
    case GfName::D: return 3;
    }
    return 0;
}

RatSeries build_p(int cap) { return p_series<Rat>({cap, 0, 0}, 0, 1); }

RatSeries alt_sign_poly(int k, int cap) {
    const Exp ux = {cap, 0, 0};
    RatSeries s(ux);
    for (int i = 0; i <= k; ++i)
        s.add_term({i, 0, 0}, alt_coeff(k, i));
    return s;
}

RatSeries build_gf_closed(GfName name, const SeriesCaps& caps) {
    const int nx = caps.nx, ny = caps.ny, nz = caps.nz;
    const Exp c1 = {nx, 0, 0};
    const Exp c2 = {nx, ny, 0};
    const Exp c3 = {nx, ny, nz};

    switch (name) {
    case GfName::P:
        return build_p(nx);
    case GfName::Q: {
        RatSeries P2 = p_series<Rat>(c2, 0, 1);
        RatSeries yP = ts_truncate(ts_mul_monomial(P2, kY), c2);
        return ts_mul(P2, ts_reciprocal(constant(c2, 1) - yP));
    }
    case GfName::R: {
        RatSeries P2 = p_series<Rat>(c2, 0, 1);
        RatSeries e_xy = ts_exp(mono(c2, {1, 1, 0}, 1));
        RatSeries y = mono(c2, kY, 1);
        return ts_mul(P2 - y, ts_reciprocal(e_xy - y));
    }
    case GfName::H: {
        const Exp work = {nx, ny + 1, 0};
        RatSeries P2 = p_series<Rat>(work, 0, 1);
        RatSeries e_xy = ts_exp(mono(work, {1, 1, 0}, 1));
        RatSeries y = mono(work, kY, 1);
        RatSeries num = ts_mul(P2, e_xy - constant(work, 1)) - mono(work, {0, 2, 0}, 1) + y;
        RatSeries num_div = ts_div_monomial(num, kY); // caps -> (nx, ny)
        RatSeries rec = ts_truncate(ts_reciprocal(e_xy - y), c2);
        return ts_mul(num_div, rec);
    }
    case GfName::L: {
        RatSeries P = build_p(nx);
        return shift_x(ts_mul(P, P), 1, 1, c1);
    }
    case GfName::T:
        return t_closed(nx, ny);
    case GfName::F:
        return f_closed(nx, ny, nz);
    case GfName::D: {
        const Exp work = {nx, ny, nz + 1};
        RatSeries E1 = ts_exp(mono(work, {1, 1, 1}, 1));
        RatSeries ez_div = ts_div_monomial(E1 - constant(work, 1), kZ); // caps -> c3
        RatSeries term2 = ts_mul(ez_div, f_closed(nx, ny, nz));
        RatSeries E = ts_truncate(E1, c3);
        RatSeries P3 = p_series<Rat>(c3, 0, 1);
        RatSeries yz = mono(c3, {0, 1, 1}, 1);
        RatSeries inner = ts_mul(ts_mul(E, P3 - yz), ts_reciprocal(E - yz));
        RatSeries term1 = ts_truncate(ts_mul_monomial(inner, kX), c3);
        return keep_y_ge_z(term1 + term2);
    }
    }
    throw std::invalid_argument("unknown generating function");
}

RatSeries build_gf_recurrence(GfName name, const SeriesCaps& caps) {
    const int nx = caps.nx, ny = caps.ny, nz = caps.nz;
    const Exp ux = {nx, 0, 0};
    RatSeries P = p_series<Rat>(ux, 0, 1);

    switch (name) {
    case GfName::P: {
        // coefficientwise from the sequence (n+1)^{n-1}
        return build_p(nx);
    }
    case GfName::Q: {
        RatSeries out({nx, ny, 0});
        RatSeries qk = P;
        add_slice(out, qk, 0, 0);
        for (int k = 1; k <= ny; ++k) {
            qk = ts_mul(P, qk);
            add_slice(out, qk, k, 0);
        }
        return out;
    }
    case GfName::R: {
        auto R = r_slices(nx, ny);
        RatSeries out({nx, ny, 0});
        for (int k = 0; k <= ny; ++k)
            add_slice(out, R[k], k, 0);
        return out;
    }
    case GfName::H: {
        auto H = h_slices(nx, ny);
        RatSeries out({nx, ny, 0});
        for (int k = 0; k <= ny; ++k)
            add_slice(out, H[k], k, 0);
        return out;
    }
    case GfName::L: {
        // leading-term-one sequence p_n^1 = 2(n+1)^{n-2} placed directly
        RatSeries out(ux);
        for (int n = 1; n <= nx; ++n)
            out.add_term({n, 0, 0}, 2 * rat_pow(n + 1, n - 2) / Rat(factorial(n - 1)));
        return out;
    }
    case GfName::T: {
        auto T = t_slices(nx, ny);
        RatSeries out({nx, ny, 0});
        for (int k = 0; k <= ny; ++k)
            add_slice(out, T[k], k, 0);
        return out;
    }
    case GfName::F: {
        auto T = t_slices(nx, ny);
        std::vector<std::vector<RatSeries>> F(nz + 1, std::vector<RatSeries>(ny + 1, RatSeries(ux)));
        RatSeries out({nx, ny, nz});
        for (int k = 0; k <= std::min(nz, ny); ++k)
            for (int s = k; s <= ny; ++s) {
                if (k == 0) {
                    F[k][s] = T[s];
                } else {
                    RatSeries val = T[s];
                    for (int i = 1; i <= k; ++i) {
                        Rat coeff = Rat(k - i + 1) * Rat(ipow(k + 1, i - 1)) / Rat(factorial(i));
                        val = val - shift_x(F[k - i][s - i], i, coeff, ux);
                    }
                    F[k][s] = std::move(val);
                }
                add_slice(out, F[k][s], s, k);
            }
        return out;
    }
    case GfName::D: {
        auto T = t_slices(nx, ny);
        auto R = r_slices(nx, nz);
        std::vector<std::vector<RatSeries>> D(nz + 1, std::vector<RatSeries>(ny + 1, RatSeries(ux)));
        RatSeries out({nx, ny, nz});
        for (int k = 0; k <= std::min(nz, ny); ++k)
            for (int s = k; s <= ny; ++s) {
                if (k == 0) {
                    // D_{0,s} = x T_{s-1}: forced by p_{n;=n}^l = p_n^l - p_{n;<=n-1}^l
                    D[0][s] = (s == 0) ? shift_x(P, 1, 1, ux) : shift_x(T[s - 1], 1, 1, ux);
                } else if (s == k) {
                    // D_{k,k} = x [R_{k-1} - p_{k-1;<=0}/(k-1)! x^{k-1}]; only k=1 keeps the correction
                    RatSeries base = R[k - 1];
                    if (k == 1)
                        base = base - constant(ux, 1);
                    D[k][k] = shift_x(base, 1, 1, ux);
                } else {
                    RatSeries val =
                        D[k - 1][s] + shift_x(T[s - k - 1], k + 1, Rat(1) / Rat(factorial(k + 1)), ux);
                    Rat inv_fact = 1;
                    for (int i = 1; i <= k; ++i) {
                        inv_fact /= i;
                        val = val - shift_x(D[k - i][s - i], i, inv_fact, ux);
                    }
                    D[k][s] = std::move(val);
                }
                add_slice(out, D[k][s], s, k);
            }
        return out;
    }
    }
    throw std::invalid_argument("unknown generating function");
}

RatSeries build_gf_explicit(GfName name, const SeriesCaps& caps) {
    const int nx = caps.nx, ny = caps.ny, nz = caps.nz;
    const Exp ux = {nx, 0, 0};
    RatSeries P = p_series<Rat>(ux, 0, 1);

    auto explicit_t = [&](int k) {
        RatSeries val(ux);
        for (int i = 0; i <= k; ++i) {
            Rat c = Rat(pow_conv(i + 1, i - 1)) / Rat(factorial(i));
            val = val + shift_x(P, i + 1, c, ux);
        }
        for (int i = 1; i <= k; ++i)
            val = val - mono(ux, {i, 0, 0}, 2 * rat_pow(i + 1, i - 2) / Rat(factorial(i - 1)));
        return val;
    };
    auto explicit_r = [&](int k) { // P*S(k) - S(k-1)
        RatSeries val = ts_mul(P, alt_sign_poly(k, nx));
        if (k >= 1)
            val = val - alt_sign_poly(k - 1, nx);
        return val;
    };

    switch (name) {
    case GfName::P:
        return build_p(nx);
    case GfName::Q: {
        RatSeries out({nx, ny, 0});
        RatSeries qk = P;
        add_slice(out, qk, 0, 0);
        for (int k = 1; k <= ny; ++k) {
            qk = ts_mul(P, qk); // Q_k = P^{k+1}
            add_slice(out, qk, k, 0);
        }
        return out;
    }
    case GfName::R: {
        RatSeries out({nx, ny, 0});
        for (int k = 0; k <= ny; ++k)
            add_slice(out, explicit_r(k), k, 0);
        return out;
    }
    case GfName::H: {
        RatSeries out({nx, ny, 0});
        for (int k = 0; k <= ny; ++k)
            add_slice(out, explicit_r(k) - explicit_r(k + 1), k, 0);
        return out;
    }
    case GfName::L:
        return build_gf_closed(name, caps);
    case GfName::T: {
        RatSeries out({nx, ny, 0});
        for (int k = 0; k <= ny; ++k)
            add_slice(out, explicit_t(k), k, 0);
        return out;
    }
    case GfName::F: {
        RatSeries out({nx, ny, nz});
        std::vector<RatSeries> T;
        for (int s = 0; s <= ny; ++s)
            T.push_back(explicit_t(s));
        for (int k = 0; k <= std::min(nz, ny); ++k)
            for (int s = k; s <= ny; ++s) {
                RatSeries val(ux);
                for (int i = 0; i <= k; ++i)
                    val = val + shift_x(T[s - i], i, alt_coeff(k, i), ux);
                add_slice(out, val, s, k);
            }
        return out;
    }
    case GfName::D: {
        RatSeries out({nx, ny, nz});
        std::vector<RatSeries> T;
        for (int s = 0; s <= ny; ++s)
            T.push_back(explicit_t(s));
        for (int k = 0; k <= std::min(nz, ny); ++k)
            for (int s = k; s <= ny; ++s) {
                RatSeries val(ux);
                if (s == k) {
                    if (k == 0) {
                        val = shift_x(P, 1, 1, ux);
                    } else {
                        RatSeries base = explicit_r(k - 1);
                        if (k == 1)
                            base = base - constant(ux, 1);
                        val = shift_x(base, 1, 1, ux);
                    }
                } else {
                    for (int i = 1; i <= k + 1; ++i) {
                        ExactInt bracket = ipow(k + 1 - i, static_cast<unsigned long>(i)) -
                                           ipow(k + 2 - i, static_cast<unsigned long>(i));
                        Rat c = Rat(bracket) / Rat(factorial(i));
                        if (i % 2 == 1)
                            c = -c;
                        val = val + shift_x(T[s - i], i, c, ux);
                    }
                }
                add_slice(out, val, s, k);
            }
        return out;
    }
    }
    throw std::invalid_argument("unknown generating function");
}

RatSeries build_gf(GfName name, const SeriesCaps& caps) { return build_gf_closed(name, caps); }

ExactInt count_from_gf(const RatSeries& series, GfName name, int n, int k, int s) {
    if (n < 0 || k < 0)
        throw std::out_of_range("count_from_gf: negative index");
    Exp e = {n, 0, 0};
    bool shifted_factorial = false; // (n-1)! families
    switch (name) {
    case GfName::P:
        break;
    case GfName::Q:
    case GfName::R:
    case GfName::H:
        e[1] = k;
        break;
    case GfName::L:
        shifted_factorial = true;
        break;
    case GfName::T:
        e[1] = k;
        shifted_factorial = true;
        break;
    case GfName::F:
    case GfName::D:
        if (s < 0)
            throw std::out_of_range("count_from_gf: F/D need the leading slice index s");
        e[1] = s;
        e[2] = k;
        shifted_factorial = true;
        break;
    }
    ExactRational c = series.coeff(e); // throws out_of_range beyond caps
    ExactInt fact = shifted_factorial ? (n == 0 ? ExactInt(1) : factorial(n - 1)) : factorial(n);
    ExactRational scaled = c * ExactRational(fact);
    if (boost::multiprecision::denominator(scaled) != 1)
        throw std::logic_error("count_from_gf: non-integer count at " + exp_string(e) +
                               " — implementation bug");
    ExactInt value = boost::multiprecision::numerator(scaled);
    if (value < 0)
        throw std::logic_error("count_from_gf: negative count at " + exp_string(e) +
                               " — implementation bug");
    return value;
}

namespace {

nlohmann::ordered_json series_json_impl(const std::string& name, const Exp& caps,
                                        nlohmann::ordered_json terms) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["caps"] = {caps[0], caps[1], caps[2]};
    j["terms"] = std::move(terms);
    return j;
}

} // namespace

std::string series_json(const std::string& name, const RatSeries& series) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : series.terms()) {
        nlohmann::ordered_json t;
        t["exp"] = {e[0], e[1], e[2]};
        t["num"] = boost::multiprecision::numerator(c).str();
        t["den"] = boost::multiprecision::denominator(c).str();
        terms.push_back(std::move(t));
    }
    return series_json_impl(name, series.caps(), std::move(terms)).dump(2);
}

std::string series_json(const std::string& name, const TruncatedSeries<EInvPoly>& series) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : series.terms()) {
        nlohmann::ordered_json t;
        t["exp"] = {e[0], e[1], e[2]};
        nlohmann::ordered_json coeff = nlohmann::ordered_json::array();
        for (int i = 0; i <= c.degree(); ++i)
            coeff.push_back(rational_string(c.coeff(i)));
        t["coeff"] = std::move(coeff);
        terms.push_back(std::move(t));
    }
    return series_json_impl(name, series.caps(), std::move(terms)).dump(2);
}

} // namespace parkfun
