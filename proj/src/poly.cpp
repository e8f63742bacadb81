#include <dyckchains/poly.hpp>

#include <algorithm>
#include <sstream>

namespace dyck::series {

namespace {

const mpq_class kZero(0);

int capped(int n, int cap) { return cap == kUnbounded ? n : std::min(n, cap + 1); }

mpq_class falling(int i, int a) {
    mpq_class r = 1;
    for (int k = 0; k < a; ++k) {
        r *= i - k;
    }
    return r;
}

} // namespace

Poly::Poly(const mpq_class& c) {
    if (sgn(c) != 0) {
        ns_ = nt_ = 1;
        c_.push_back(c);
    }
}

Poly Poly::monomial(const mpq_class& c, int s_deg, int t_deg) {
    Poly p;
    if (sgn(c) == 0) {
        return p;
    }
    p.resize(s_deg + 1, t_deg + 1);
    p.at(s_deg, t_deg) = c;
    return p;
}

int Poly::total_degree() const {
    int best = -1;
    for (int i = 0; i < ns_; ++i) {
        for (int j = 0; j < nt_; ++j) {
            if (sgn(c_[static_cast<std::size_t>(i * nt_ + j)]) != 0) {
                best = std::max(best, i + j);
            }
        }
    }
    return best;
}

const mpq_class& Poly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= ns_ || j >= nt_) {
        return kZero;
    }
    return c_[static_cast<std::size_t>(i * nt_ + j)];
}

void Poly::resize(int ns, int nt) {
    if (ns == ns_ && nt == nt_) {
        return;
    }
    std::vector<mpq_class> next(static_cast<std::size_t>(ns * nt));
    for (int i = 0; i < std::min(ns, ns_); ++i) {
        for (int j = 0; j < std::min(nt, nt_); ++j) {
            next[static_cast<std::size_t>(i * nt + j)] = std::move(at(i, j));
        }
    }
    c_ = std::move(next);
    ns_ = ns;
    nt_ = nt;
}

void Poly::trim() {
    int ns = 0;
    int nt = 0;
    for (int i = 0; i < ns_; ++i) {
        for (int j = 0; j < nt_; ++j) {
            if (sgn(c_[static_cast<std::size_t>(i * nt_ + j)]) != 0) {
                ns = std::max(ns, i + 1);
                nt = std::max(nt, j + 1);
            }
        }
    }
    resize(ns, nt);
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.is_zero()) {
        return *this;
    }
    resize(std::max(ns_, other.ns_), std::max(nt_, other.nt_));
    for (int i = 0; i < other.ns_; ++i) {
        for (int j = 0; j < other.nt_; ++j) {
            at(i, j) += other.coeff(i, j);
        }
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.is_zero()) {
        return *this;
    }
    resize(std::max(ns_, other.ns_), std::max(nt_, other.nt_));
    for (int i = 0; i < other.ns_; ++i) {
        for (int j = 0; j < other.nt_; ++j) {
            at(i, j) -= other.coeff(i, j);
        }
    }
    trim();
    return *this;
}

Poly& Poly::operator*=(const mpq_class& k) {
    if (sgn(k) == 0) {
        *this = Poly();
        return *this;
    }
    for (auto& c : c_) {
        c *= k;
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) {
        c = -c;
    }
    return p;
}

void Poly::add_product(const Poly& a, const Poly& b, int s_cap, int t_cap) {
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    const int ns = capped(a.ns_ + b.ns_ - 1, s_cap);
    const int nt = capped(a.nt_ + b.nt_ - 1, t_cap);
    resize(std::max(ns_, ns), std::max(nt_, nt));
    mpq_class tmp;
    for (int i1 = 0; i1 < a.ns_ && i1 < ns; ++i1) {
        for (int j1 = 0; j1 < a.nt_ && j1 < nt; ++j1) {
            const mpq_class& x = a.c_[static_cast<std::size_t>(i1 * a.nt_ + j1)];
            if (sgn(x) == 0) {
                continue;
            }
            for (int i2 = 0; i2 < b.ns_ && i1 + i2 < ns; ++i2) {
                for (int j2 = 0; j2 < b.nt_ && j1 + j2 < nt; ++j2) {
                    const mpq_class& y = b.c_[static_cast<std::size_t>(i2 * b.nt_ + j2)];
                    if (sgn(y) == 0) {
                        continue;
                    }
                    mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
                    at(i1 + i2, j1 + j2) += tmp;
                }
            }
        }
    }
    trim();
}

Poly Poly::truncated(int s_cap, int t_cap) const {
    Poly p = *this;
    p.resize(capped(ns_, s_cap), capped(nt_, t_cap));
    p.trim();
    return p;
}

mpq_class Poly::derivative_at_one(int a, int b) const {
    mpq_class sum = 0;
    for (int i = a; i < ns_; ++i) {
        for (int j = b; j < nt_; ++j) {
            const mpq_class& c = coeff(i, j);
            if (sgn(c) != 0) {
                sum += c * falling(i, a) * falling(j, b);
            }
        }
    }
    return sum;
}

mpq_class Poly::eval(const mpq_class& s, const mpq_class& t) const {
    mpq_class sum = 0;
    mpq_class s_pow = 1;
    for (int i = 0; i < ns_; ++i) {
        mpq_class t_pow = 1;
        for (int j = 0; j < nt_; ++j) {
            sum += coeff(i, j) * s_pow * t_pow;
            t_pow *= t;
        }
        s_pow *= s;
    }
    return sum;
}

std::optional<Poly> Poly::divided_by_s() const {
    for (int j = 0; j < nt_; ++j) {
        if (sgn(coeff(0, j)) != 0) {
            return std::nullopt;
        }
    }
    Poly p;
    if (is_zero()) {
        return p;
    }
    p.resize(ns_ - 1, nt_);
    for (int i = 1; i < ns_; ++i) {
        for (int j = 0; j < nt_; ++j) {
            p.at(i - 1, j) = coeff(i, j);
        }
    }
    p.trim();
    return p;
}

std::optional<Poly> Poly::divided_by_t() const {
    for (int i = 0; i < ns_; ++i) {
        if (sgn(coeff(i, 0)) != 0) {
            return std::nullopt;
        }
    }
    Poly p;
    if (is_zero()) {
        return p;
    }
    p.resize(ns_, nt_ - 1);
    for (int i = 0; i < ns_; ++i) {
        for (int j = 1; j < nt_; ++j) {
            p.at(i, j - 1) = coeff(i, j);
        }
    }
    p.trim();
    return p;
}

std::optional<Poly> Poly::inverse(int s_cap, int t_cap) const {
    const mpq_class c0 = constant_term();
    if (sgn(c0) == 0) {
        return std::nullopt;
    }
    if (is_constant()) {
        return Poly(1 / c0);
    }
    if ((ns_ > 1 && s_cap == kUnbounded) || (nt_ > 1 && t_cap == kUnbounded)) {
        return std::nullopt;
    }
    // p = c0 (1 + r) with r nilpotent under the caps: 1/p = (1/c0) sum (-r)^k
    Poly r = *this * (1 / c0);
    r -= Poly(1);
    const Poly minus_r = -r;
    Poly term(1);
    Poly sum(1);
    const int steps = (s_cap == kUnbounded ? 0 : s_cap) + (t_cap == kUnbounded ? 0 : t_cap);
    for (int k = 1; k <= steps; ++k) {
        Poly next;
        next.add_product(term, minus_r, s_cap, t_cap);
        term = std::move(next);
        sum += term;
    }
    sum *= 1 / c0;
    return sum;
}

std::string Poly::to_string(const std::string& s_name, const std::string& t_name) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < ns_; ++i) {
        for (int j = 0; j < nt_; ++j) {
            mpq_class c = coeff(i, j);
            if (sgn(c) == 0) {
                continue;
            }
            if (first) {
                if (sgn(c) < 0) {
                    out << '-';
                }
            } else {
                out << (sgn(c) < 0 ? " - " : " + ");
            }
            c = abs(c);
            const bool bare = i == 0 && j == 0;
            if (bare || c != 1) {
                out << c.get_str();
                if (!bare) {
                    out << '*';
                }
            }
            bool need_star = false;
            if (i > 0) {
                out << s_name;
                if (i > 1) {
                    out << '^' << i;
                }
                need_star = true;
            }
            if (j > 0) {
                if (need_star) {
                    out << '*';
                }
                out << t_name;
                if (j > 1) {
                    out << '^' << j;
                }
            }
            first = false;
        }
    }
    return out.str();
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    p.add_product(a, b, kUnbounded, kUnbounded);
    return p;
}
Poly operator*(Poly a, const mpq_class& k) { return a *= k; }

} // namespace dyck::series
