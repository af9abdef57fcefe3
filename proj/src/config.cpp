#include "lns/config.hpp"

#include "lns/error.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace lns {

using nlohmann::json;

namespace {

// "5.792e58" -> smallest integer >= the exact decimal value.
Int decimal_ceil(const std::string& text) {
    const auto epos = text.find_first_of("eE");
    std::string mant = text.substr(0, epos);
    long exp10 = epos == std::string::npos ? 0 : std::stol(text.substr(epos + 1));
    const auto dot = mant.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    Rat v{Int(mant)};
    if (exp10 >= 0)
        v *= Rat(ipow(10, static_cast<unsigned long>(exp10)));
    else
        v /= Rat(ipow(10, static_cast<unsigned long>(-exp10)));
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return c;
}

Int to_int(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    throw DataIntegrityError("expected an integer, got " + j.dump());
}

Rat to_rat(const json& j) {
    if (j.is_string()) {
        Rat r(j.get<std::string>());
        r.canonicalize();
        return r;
    }
    return Rat(to_int(j));
}

std::vector<Int> int_vec(const json& j) {
    std::vector<Int> v;
    for (const auto& e : j) v.push_back(to_int(e));
    return v;
}

FieldElem field_elem(const json& j, std::size_t degree, const std::string& what) {
    FieldElem e{int_vec(j)};
    if (e.coords.size() != degree) throw DataIntegrityError(what + ": wrong number of coordinates");
    return e;
}

FieldData parse_field(const json& j, const std::string& name) {
    FieldData fd;
    fd.name = name;
    fd.defining_poly = int_vec(j.at("defining_poly"));
    const std::size_t n = fd.defining_poly.size() - 1;
    for (const auto& b : j.at("integral_basis")) {
        const Int den = to_int(b.at("den"));
        if (den <= 0) throw DataIntegrityError(name + ": basis denominator must be positive");
        RatVec v;
        for (const auto& c : b.at("num")) {
            Rat q(to_int(c), den);
            q.canonicalize();
            v.push_back(q);
        }
        fd.integral_basis.push_back(v);
    }
    fd.class_number = j.value("class_number", 1);
    for (const auto& [k, v] : j.at("units").items()) fd.units[k] = field_elem(v, n, name + "." + k);
    for (const auto& [k, v] : j.at("primes").items()) fd.primes[k] = field_elem(v, n, name + "." + k);
    for (const auto& f : j.at("factorizations")) {
        FactorizationIdentity id;
        id.label = f.at("label").get<std::string>();
        id.rational_prime = to_int(f.at("prime"));
        id.sign = f.value("sign", 1);
        for (const auto& pair : f.at("factors")) id.factors.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<int>());
        fd.factorizations.push_back(id);
    }
    fd.finalize();
    return fd;
}

std::vector<unsigned long> digit_vec(const json& j) {
    std::vector<unsigned long> v;
    for (const auto& d : j) v.push_back(d.get<unsigned long>());
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read configuration file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    s = s.substr(b, e - b + 1);
    if (auto sp = s.find_first_of(" \t"); sp != std::string::npos) s = s.substr(0, sp);
    return s;
}

}  // namespace

const PadicSetup& Config::padic_setup(long p) const {
    auto it = padic.find(p);
    if (it == padic.end()) throw InputError("no p-adic setup for p = " + std::to_string(p));
    return it->second;
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw ResourceError("SHA-256 digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

Config parse_config(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError("malformed configuration " + source + ": " + e.what());
    }
    Config cfg;
    cfg.source = source;
    cfg.sha256 = sha256_hex(text);
    try {
        if (j.value("schema_version", 0) != 1) throw DataIntegrityError("unsupported configuration schema version");
        cfg.cubic = parse_field(j.at("fields").at("cubic"), "cubic");
        cfg.quartic = parse_field(j.at("fields").at("quartic"), "quartic");

        for (const auto& [k, v] : j.at("padic").items()) {
            PadicSetup s;
            s.p = Int(k);
            s.precision = v.at("precision").get<long>();
            if (s.precision < 1) throw DataIntegrityError("p-adic precision must be positive");
            s.u_poly = int_vec(v.at("u_poly"));
            const auto& pr = v.at("printed");
            s.printed_g1_root = digit_vec(pr.at("g1_root"));
            for (const auto& row : pr.at("g2")) s.printed_g2.push_back(digit_vec(row));
            cfg.padic[std::stol(k)] = s;
        }

        const auto& t = j.at("thue_mahler");
        TMConstants& tm = cfg.tm;
        tm.c7 = t.at("c7").get<double>();
        tm.c13 = t.at("c13").get<double>();
        tm.c14 = t.at("c14").get<double>();
        tm.c16_upper = t.at("c16_upper").get<double>();
        tm.K0_ceil = decimal_ceil(t.at("K0").get<std::string>());
        tm.N0_ceil = decimal_ceil(t.at("N0").get<std::string>());
        tm.K0 = tm.K0_ceil.get_d();
        tm.N0 = tm.N0_ceil.get_d();
        for (const auto& r : t.at("reduction_schedule")) {
            ReductionRound rr;
            for (const auto& [k, v] : r.at("padic_precision").items())
                rr.padic_precision[std::stol(k)] = v.is_null() ? std::nullopt : std::optional<long>(v.get<long>());
            const auto& rd = r.at("real_digits");
            if (!rd.is_null()) rr.real_digits = rd.get<long>();
            rr.merge_n_bounds = r.at("merge_n_bounds").get<bool>();
            tm.schedule.push_back(rr);
        }
        if (tm.schedule.empty()) throw DataIntegrityError("empty reduction schedule");
        tm.padic_weight = to_int(t.at("padic_weight"));
        tm.real_digits = t.at("real_digits").get<int>();
        tm.real_working_digits = t.at("real_working_digits").get<int>();
        if (tm.real_working_digits < tm.real_digits) throw DataIntegrityError("working digits below output digits");
        const auto& ag = t.at("alpha_generators");
        for (const auto& pr : ag.at("i_pairs")) tm.i_pairs.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
        tm.j1_max = ag.at("j1_max").get<int>();
        tm.j2_max = ag.at("j2_max").get<int>();
        const auto& pb = t.at("published_bounds");
        tm.published = {pb.at("N1").get<long>(),       pb.at("K1").get<long>(),       pb.at("N2").get<long>(),
                        pb.at("K2").get<long>(),       pb.at("n1_final").get<long>(), pb.at("n2_final").get<long>(),
                        pb.at("A_final").get<long>()};

        const auto& sv = j.at("sieve");
        cfg.sieve.chain = int_vec(sv.at("chain"));
        for (const auto& [k, v] : sv.at("printed").items()) {
            PrintedSievePrime sp;
            sp.q = Int(k);
            sp.roots = int_vec(v.at("roots"));
            for (const auto& e : v.at("elimination")) sp.elimination.emplace_back(to_int(e.at(0)), to_int(e.at(1)));
            if (v.contains("orders"))
                for (const auto& [lab, o] : v.at("orders").items()) sp.orders[lab] = o.get<long>();
            sp.display_modulus = v.value("display_modulus", 0L);
            cfg.sieve.printed[std::stol(k)] = sp;
        }
        if (sv.contains("published_trace")) {
            const auto& pt = sv.at("published_trace");
            auto c = pt.at("case").get<std::array<int, 4>>();
            cfg.sieve.published_case = c;
            cfg.sieve.published_counts = pt.at("counts").get<std::vector<long>>();
        }

        const auto& g = j.at("golden");
        for (const auto& tup : g.at("n3")) cfg.golden.n3.push_back(tup.get<GoldenTuple>());
        for (const auto& tup : g.at("n6")) cfg.golden.n6.push_back(tup.get<GoldenTuple>());
        cfg.golden.e54_x = to_rat(g.at("e54_point").at("X"));
        cfg.golden.e54_y = to_rat(g.at("e54_point").at("Y"));
    } catch (const json::exception& e) {
        throw InputError("configuration " + source + " is missing or mistyped: " + e.what());
    }
    verify_field(cfg.cubic);
    verify_field(cfg.quartic);
    return cfg;
}

Config load_config_file(const std::string& path) {
    const std::string text = read_file(path);
    std::ifstream side(path + ".sha256");
    if (side) {
        std::string line;
        std::getline(side, line);
        // Either a bare digest or sha256sum output.
        std::string want = trim(line);
        want = want.substr(0, want.find_first_of(" \t"));
        const std::string got = sha256_hex(text);
        if (want != got) throw DataIntegrityError("checksum mismatch for " + path + ": recorded " + want + ", actual " + got);
    }
    return parse_config(text, path);
}

Config load_default_config() {
    const std::string text = embedded_config_text();
    if (sha256_hex(text) != embedded_config_sha256())
        throw DataIntegrityError("compiled-in configuration does not match its recorded checksum");
    return parse_config(text, "<built-in>");
}

Config load_config() {
    if (const char* path = std::getenv(kConfigEnvVar); path && *path) return load_config_file(path);
    return load_default_config();
}

}  // namespace lns
