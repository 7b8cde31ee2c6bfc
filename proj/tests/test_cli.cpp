#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "fbar/container.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Sandbox {
public:
    Sandbox() {
        dir_ = fs::temp_directory_path() / ("fbar_cli_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(dir_);
    }
    ~Sandbox() { fs::remove_all(dir_); }

    fs::path path(const std::string& name) const { return dir_ / name; }

    RunResult run(const std::string& args, const std::string& env = "") const {
        const fs::path out = dir_ / "stdout.txt";
        const fs::path err = dir_ / "stderr.txt";
        const std::string cmd = (env.empty() ? "" : env + " ") + std::string(FBAR_CLI_PATH) + " " + args +
                                " > " + out.string() + " 2> " + err.string();
        const int status = std::system(cmd.c_str());
        RunResult r;
        r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

    void write(const std::string& name, const std::vector<std::uint8_t>& data) const {
        std::ofstream f(path(name), std::ios::binary);
        f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    }

private:
    fs::path dir_;
};

std::vector<std::uint8_t> sample_text() {
    const std::string s =
        "Compression without loss means the decompressed bytes match the input "
        "exactly, bit for bit, every time.\n";
    return {s.begin(), s.end()};
}

} // namespace

TEST_CASE("compress then decompress restores the file byte for byte") {
    Sandbox sb;
    sb.write("input.txt", sample_text());

    for (const std::string mode : {"collapsed", "channels"}) {
        const auto compress = sb.run("compress " + sb.path("input.txt").string() + " --output " +
                                     sb.path("out.fbar").string() + " --mode " + mode);
        CHECK(compress.exit_code == 0);
        CHECK(compress.out.find("honest_ratio") != std::string::npos);
        CHECK(compress.out.find("space_saving") != std::string::npos);

        const auto decompress = sb.run("decompress " + sb.path("out.fbar").string() + " --output " +
                                       sb.path("restored.txt").string());
        CHECK(decompress.exit_code == 0);
        CHECK(slurp(sb.path("restored.txt")) == slurp(sb.path("input.txt")));
    }
}

TEST_CASE("compress accepts an empty file") {
    Sandbox sb;
    sb.write("empty", {});
    const auto compress =
        sb.run("compress " + sb.path("empty").string() + " --output " + sb.path("empty.fbar").string());
    CHECK(compress.exit_code == 0);
    CHECK(fs::file_size(sb.path("empty.fbar")) == fbar::FbarContainer::kHeaderSize);

    const auto decompress = sb.run("decompress " + sb.path("empty.fbar").string() + " --output " +
                                   sb.path("empty.out").string());
    CHECK(decompress.exit_code == 0);
    CHECK(fs::file_size(sb.path("empty.out")) == 0);
}

TEST_CASE("exit codes") {
    Sandbox sb;
    sb.write("input.txt", sample_text());

    // 1: missing input file
    CHECK(sb.run("compress " + sb.path("nope").string() + " --output " + sb.path("x").string()).exit_code == 1);

    // 2: invalid flags
    CHECK(sb.run("compress " + sb.path("input.txt").string() + " --output " + sb.path("x").string() +
                 " --mode bogus")
              .exit_code == 2);
    CHECK(sb.run("frobnicate").exit_code == 2);
    CHECK(sb.run("audit").exit_code == 2);

    // 3: corrupted container
    REQUIRE(sb.run("compress " + sb.path("input.txt").string() + " --output " + sb.path("c.fbar").string())
                .exit_code == 0);
    auto bytes = slurp(sb.path("c.fbar"));
    bytes[fbar::FbarContainer::kHeaderSize + 2] = static_cast<char>(bytes[fbar::FbarContainer::kHeaderSize + 2] ^ 0x40);
    std::ofstream(sb.path("c.fbar"), std::ios::binary) << bytes;
    const auto corrupt = sb.run("decompress " + sb.path("c.fbar").string() + " --output " + sb.path("y").string());
    CHECK(corrupt.exit_code == 3);
    CHECK(!corrupt.err.empty());

    // 3: not a container at all
    CHECK(sb.run("decompress " + sb.path("input.txt").string() + " --output " + sb.path("z").string())
              .exit_code == 3);
}

TEST_CASE("audit renders reports, claims and machine lines") {
    Sandbox sb;
    sb.write("a.txt", sample_text());
    sb.write("b.txt", std::vector<std::uint8_t>(128, 0xFF));

    const auto r = sb.run("audit " + sb.path("a.txt").string() + " " + sb.path("b.txt").string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("aggregate (2 files)") != std::string::npos);
    CHECK(r.out.find("claims audit") != std::string::npos);
    CHECK(r.out.find("internal consistency") != std::string::npos);
    CHECK(r.out.find("fbar.aggregate.honest.ratio=") != std::string::npos);
    CHECK(r.out.find("fbar.claim.paper_accounting_2to1=pass") != std::string::npos);

    // deterministic across runs (sequential mode pinned via env var)
    const auto again = sb.run("audit " + sb.path("a.txt").string() + " " + sb.path("b.txt").string(),
                              "FBAR_NO_PARALLEL=1");
    const auto once_more = sb.run("audit " + sb.path("a.txt").string() + " " + sb.path("b.txt").string(),
                                  "FBAR_NO_PARALLEL=1");
    CHECK(again.out == once_more.out);
    CHECK(again.out == r.out);
}

TEST_CASE("audit of a pure-pair file reports an exact paper ratio") {
    Sandbox sb;
    sb.write("ff.bin", std::vector<std::uint8_t>(256, 0xFF));
    const auto r = sb.run("audit --accounting paper " + sb.path("ff.bin").string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("fbar.aggregate.paper.ratio=2\n") != std::string::npos);
}

TEST_CASE("audit --collisions lists the seven letter pairs") {
    Sandbox sb;
    const auto r = sb.run("audit --collisions");
    CHECK(r.exit_code == 0);
    for (const std::string pair : {"AB", "EF", "IJ", "MN", "QR", "UV", "YZ", "ab", "yz"}) {
        CHECK(r.out.find("  " + pair + "    odd") != std::string::npos);
    }
    CHECK(r.out.find("  CD    even") != std::string::npos);
    CHECK(r.out.find("odd-orientation letters: 28") != std::string::npos);
}

TEST_CASE("export-batch writes the sideband listing") {
    Sandbox sb;
    // 'P' has rising pairs at positions 0 and 1
    sb.write("p.txt", {'P'});
    REQUIRE(sb.run("compress " + sb.path("p.txt").string() + " --output " + sb.path("p.fbar").string())
                .exit_code == 0);
    const auto r = sb.run("export-batch " + sb.path("p.fbar").string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "QRAND00 QROR00\nQRAND01 QROR01\n");

    const auto to_file = sb.run("export-batch " + sb.path("p.fbar").string() + " --output " +
                                sb.path("batch.txt").string());
    CHECK(to_file.exit_code == 0);
    CHECK(slurp(sb.path("batch.txt")) == "QRAND00 QROR00\nQRAND01 QROR01\n");

    // compress --export-batch produces the same listing
    REQUIRE(sb.run("compress " + sb.path("p.txt").string() + " --output " + sb.path("p2.fbar").string() +
                   " --export-batch " + sb.path("batch2.txt").string())
                .exit_code == 0);
    CHECK(slurp(sb.path("batch2.txt")) == slurp(sb.path("batch.txt")));
}
