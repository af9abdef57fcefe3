#include "lns/poly.hpp"

#include "lns/error.hpp"

#include <sstream>

namespace lns {

Poly Poly::constant(int nvars, const Int& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::var(int nvars, int index) {
    if (index < 0 || index >= nvars) throw InputError("Poly::var: index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    Poly p(nvars);
    p.add_term(m, 1);
    return p;
}

Int Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Int& c) {
    if (static_cast<int>(m.size()) != nvars_) throw InputError("Poly: monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    if (o.nvars_ != nvars_) throw InputError("Poly: ring mismatch");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (o.nvars_ != nvars_) throw InputError("Poly: ring mismatch");
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Int& k) const {
    Poly r(nvars_);
    if (k == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Poly Poly::substitute(const std::vector<Poly>& subs) const {
    if (static_cast<int>(subs.size()) != nvars_) throw InputError("Poly::substitute: arity mismatch");
    int target = subs.empty() ? 0 : subs[0].nvars();
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Poly t = constant(target, c);
        for (int i = 0; i < nvars_; ++i) {
            if (m[i]) t = t * subs[i].pow(static_cast<unsigned>(m[i]));
        }
        r = r + t;
    }
    return r;
}

Int Poly::evaluate(const std::vector<Int>& at) const {
    if (static_cast<int>(at.size()) != nvars_) throw InputError("Poly::evaluate: arity mismatch");
    Int sum = 0;
    for (const auto& [m, c] : terms_) {
        Int t = c;
        for (int i = 0; i < nvars_; ++i) {
            for (int k = 0; k < m[i]; ++k) t *= at[i];
        }
        sum += t;
    }
    return sum;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = false;
        for (int v : m) has_var = has_var || v != 0;
        if (a != 1 || !has_var) os << a.get_str();
        for (int i = 0; i < nvars_; ++i) {
            if (!m[i]) continue;
            os << names.at(i);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

}  // namespace lns
