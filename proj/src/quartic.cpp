#include "lns/quartic.hpp"

#include "lns/error.hpp"

namespace lns {

N4Case split_form(long a1, long b1, long a2, long b2) {
    if (a1 < 0 || b1 < 0 || a2 < 0 || b2 < 0) throw InputError("split_form: exponents must be non-negative");
    N4Case c;
    c.a1 = a1;
    c.b1 = b1;
    c.a2 = a2;
    c.b2 = b2;
    c.D = 2 * (a2 % 2 ? 5 : 1) * (b2 % 2 ? 11 : 1);
    c.u = ipow(5, a2 / 2) * ipow(11, b2 / 2);
    return c;
}

N4Case descend_n4(long a, long b, const Int& x, const Int& y) {
    if (a < 0 || b < 0) throw InputError("descend_n4: exponents must be non-negative");
    if (x < 1 || y < 1) throw InputError("descend_n4: x and y must be positive");
    if (gcd(x, y) != 1) throw InputError("descend_n4: gcd(x, y) != 1");
    if (x * x + ipow(5, a) * ipow(11, b) != ipow(y, 4)) throw InputError("descend_n4: not a solution with n = 4");
    Int P = y * y + x, Q = y * y - x;
    long a1 = valuation(P, Int(5)), b1 = valuation(P, Int(11));
    long a2 = valuation(Q, Int(5)), b2 = valuation(Q, Int(11));
    if ((a1 > 0 && a2 > 0) || (b1 > 0 && b2 > 0)) throw DomainError("descend_n4: both factors share 5 or 11");
    N4Case c = split_form(a1, b1, a2, b2);
    c.Z = 2 * y;
    if (c.Z * c.Z - c.D * c.u * c.u != 2 * P) throw MathMismatch("descend_n4: Z^2 - D u^2 != 2 (y^2 + x)");
    c.gcd_Zu_one = gcd(c.Z, c.u) == 1;
    return c;
}

namespace {

// Z^2 = D u^2 mod p with p not dividing both: none when D is a non-residue.
ResidueCheck residue_branch(long D, long p) {
    ResidueCheck r;
    r.claim = "Z^2 = " + std::to_string(D % p) + " u^2 mod " + std::to_string(p) + " forces p | Z and p | u";
    r.modulus = p;
    for (long Z = 0; Z < p; ++Z) {
        for (long u = 0; u < p; ++u) {
            ++r.cases;
            if (Z == 0 && u == 0) continue;
            if ((Z * Z - D * u * u) % p == 0) ++r.counterexamples;
        }
    }
    return r;
}

// p | D: Z^2 = 0 forces p | Z, then p | 2y^2 = P + Q with p | P forces p | Q.
std::vector<ResidueCheck> cascade_branch(long p) {
    ResidueCheck z;
    z.claim = "Z^2 = 0 mod " + std::to_string(p) + " forces Z = 0";
    z.modulus = p;
    for (long Z = 0; Z < p; ++Z) {
        ++z.cases;
        if (Z * Z % p == 0 && Z != 0) ++z.counterexamples;
    }
    ResidueCheck q;
    q.claim = "Z = 2y = 0 and P = 0 mod " + std::to_string(p) + " force Q = 2y^2 - P = 0, so both exponents positive";
    q.modulus = p;
    for (long y = 0; y < p; ++y) {
        for (long P = 0; P < p; ++P) {
            for (long Q = 0; Q < p; ++Q) {
                if ((2 * y) % p != 0 || P != 0) continue;
                if ((P + Q - 2 * y * y) % p != 0) continue;
                ++q.cases;
                if (Q != 0) ++q.counterexamples;
            }
        }
    }
    return {z, q};
}

}  // namespace

N4Replay verify_impossibility(long D) {
    if (D != 2 && D != 10 && D != 22 && D != 110) throw InputError("verify_impossibility: D must be 2, 10, 22 or 110");
    N4Replay r;
    r.D = D;
    for (long p : {5L, 11L}) {
        auto& checks = p == 5 ? r.a1_checks : r.b1_checks;
        if (D % p != 0) {
            checks.push_back(residue_branch(D, p));
        } else {
            checks = cascade_branch(p);
        }
        bool ok = true;
        for (const auto& c : checks) ok = ok && c.holds() && c.cases > 0;
        (p == 5 ? r.a1_zero : r.b1_zero) = ok;
    }
    // With a1 = b1 = 0, y^2 + x = 1, but y^2 + x is increasing in both and
    // already 2 at x = y = 1.
    const long x = 1, y = 1;
    r.terminal_impossible = y * y + x > 1;
    return r;
}

}  // namespace lns
