#include "common.hpp"

#include "lns/error.hpp"
#include "lns/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <unistd.h>

using namespace lns;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("lns_test_" + std::to_string(std::rand()) + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("checksums") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    const auto& cfg = test::config();
    CHECK(cfg.sha256 == embedded_config_sha256());
    CHECK(cfg.sha256 == sha256_hex(embedded_config_text()));
    CHECK(cfg.source == "<built-in>");
}

TEST_CASE("configuration files and sidecars") {
    TempDir dir;
    const std::string text = embedded_config_text();
    auto file = dir.path / "cfg.json";
    write(file, text);

    auto plain = load_config_file(file.string());
    CHECK(plain.sha256 == sha256_hex(text));
    CHECK(plain.quartic.defining_poly == test::config().quartic.defining_poly);

    write(fs::path(file.string() + ".sha256"), sha256_hex(text) + "  cfg.json\n");
    CHECK_NOTHROW(load_config_file(file.string()));

    write(fs::path(file.string() + ".sha256"), std::string(64, '0') + "\n");
    CHECK_THROWS_AS(load_config_file(file.string()), DataIntegrityError);
    fs::remove(file.string() + ".sha256");

    // A corrupted unit is caught at load time.
    std::string bad = text;
    auto pos = bad.find("677070473");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 9, "677070474");
    write(file, bad);
    CHECK_THROWS_AS(load_config_file(file.string()), DataIntegrityError);

    CHECK_THROWS(load_config_file((dir.path / "missing.json").string()));

    write(file, "{not json");
    CHECK_THROWS(load_config_file(file.string()));
}

TEST_CASE("LNS_CONFIG selects the file") {
    TempDir dir;
    auto file = dir.path / "env.json";
    write(file, embedded_config_text());
    ::setenv(kConfigEnvVar, file.string().c_str(), 1);
    auto cfg = load_config();
    ::unsetenv(kConfigEnvVar);
    CHECK(cfg.source == file.string());
    CHECK(load_config().source == "<built-in>");
}

TEST_CASE("report layout") {
    const auto& cfg = test::config();
    Report r("demo", cfg);
    r.param("k", 3);
    r.check("ok", true);
    r.compare("value", 1, 2, false);
    r.set("extra", "x");
    Json j = r.json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "parameters", "config", "pass", "checks", "published", "extra"});
    CHECK(j["pass"] == true);
    CHECK(j["published"]["status"] == "differs");
    CHECK(j["config"]["sha256"] == cfg.sha256);
    r.set_strict(true);
    CHECK_FALSE(r.pass());

    r.check("bad", false);
    r.set_strict(false);
    CHECK_FALSE(r.pass());

    CHECK(to_json(Int(42)) == 42);
    CHECK(to_json(Int("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("module reports") {
    const auto& cfg = test::config();
    CHECK(n4_report(cfg).pass());
    CHECK(lucas_report(cfg, 11, 5).pass());
    auto d = descent3_report(cfg, "i1", false);
    CHECK(d.pass());
    CHECK(d.json()["command"] == "descent3");
    auto s = search_report(cfg, 100, {6}, 2);
    CHECK(s.pass());
}
