#pragma once

// Run configuration: field data, p-adic setup, reduction constants, sieve chain
// and golden values. A default copy is compiled into the library; the
// LNS_CONFIG environment variable points at a replacement file.

#include "lns/numberfield.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lns {

inline constexpr const char* kConfigEnvVar = "LNS_CONFIG";

struct PadicSetup {
    Int p;
    long precision = 0;
    std::vector<Int> u_poly;
    std::vector<unsigned long> printed_g1_root;
    // Printed leading digits of the cubic factor, constant term first.
    std::vector<std::vector<unsigned long>> printed_g2;
};

struct PublishedBounds {
    long N1 = 0, K1 = 0, N2 = 0, K2 = 0;
    long n1_final = 0, n2_final = 0, A_final = 0;
};

// One pass of p-adic reduction followed by real reduction. Unset precisions
// mean "smallest value for which the reduction condition holds".
struct ReductionRound {
    std::map<long, std::optional<long>> padic_precision;
    std::optional<long> real_digits;
    // Carry max(n1, n2) forward instead of the two separate bounds.
    bool merge_n_bounds = true;
};

struct TMConstants {
    double c7 = 0, c13 = 0, c14 = 0, c16_upper = 0, K0 = 0, N0 = 0;
    // Integer ceilings of the initial bounds, read exactly from the decimal text.
    Int K0_ceil, N0_ceil;
    std::vector<ReductionRound> schedule;
    Int padic_weight;
    int real_digits = 200;
    int real_working_digits = 215;
    std::vector<std::pair<int, int>> i_pairs;
    int j1_max = 2;
    int j2_max = 1;
    PublishedBounds published;
};

struct PrintedSievePrime {
    Int q;
    std::vector<Int> roots;
    std::vector<std::pair<Int, Int>> elimination;
    std::map<std::string, long> orders;
    long display_modulus = 0;
};

struct SieveSetup {
    std::vector<Int> chain;
    std::map<long, PrintedSievePrime> printed;
    // (i1, i2, j1, j2) and its counts: first congruence, both, lifted, then
    // one count per later prime.
    std::array<int, 4> published_case{};
    std::vector<long> published_counts;
};

// (a, b, x, y) tuples.
using GoldenTuple = std::array<long, 4>;

struct GoldenData {
    std::vector<GoldenTuple> n3;
    std::vector<GoldenTuple> n6;
    Rat e54_x, e54_y;
};

struct Config {
    FieldData cubic;
    FieldData quartic;
    std::map<long, PadicSetup> padic;
    TMConstants tm;
    SieveSetup sieve;
    GoldenData golden;
    std::string source;
    std::string sha256;

    const PadicSetup& padic_setup(long p) const;
};

std::string sha256_hex(const std::string& data);

// Parses and verifies (irreducibility, units, factorization identities).
Config parse_config(const std::string& text, const std::string& source);

// Reads a file; if "<path>.sha256" exists its digest must match.
Config load_config_file(const std::string& path);

// The compiled-in copy, checked against the digest recorded at build time.
Config load_default_config();

// LNS_CONFIG if set, otherwise the compiled-in copy.
Config load_config();

const char* embedded_config_text();
const char* embedded_config_sha256();

}  // namespace lns
