#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "pdf_fixtures.hpp"
#include "pdfwm/metrics.hpp"
#include "pdfwm/png_codec.hpp"
#include "pdfwm/spatial_embed.hpp"
#include "synth_images.hpp"

namespace fs = std::filesystem;
using namespace pdfwm;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

void spit(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    REQUIRE(out.good());
}

class CliFixture {
public:
    CliFixture() {
        const char* bin = std::getenv("PDFWM_BIN");
        REQUIRE_MESSAGE(bin != nullptr,
                        "PDFWM_BIN must point at the pdfwm binary");
        bin_ = bin;
        dir_ = fs::temp_directory_path() /
               ("pdfwm_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    ~CliFixture() { fs::remove_all(dir_); }

    RunResult run(const std::string& args,
                  const std::string& env = std::string()) const {
        const fs::path out = dir_ / "stdout.txt";
        const fs::path err = dir_ / "stderr.txt";
        const std::string cmd = (env.empty() ? "" : env + " ") + bin_ + " " +
                                args + " > " + out.string() + " 2> " +
                                err.string();
        const int status = std::system(cmd.c_str());
        RunResult r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

    fs::path path(const std::string& name) const { return dir_ / name; }

private:
    std::string bin_;
    fs::path dir_;
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("cli drives the full spatial and frequency pipelines") {
    CliFixture cli;

    // fixtures on disk
    const auto cover = testsupport::document_cover(96, 72, 1234);
    const auto mark = testsupport::glyph_mark(72, 96, 1235);
    spit(cli.path("doc.pdf"), testsupport::simple_pdf(cover));
    spit(cli.path("mark.png"), png_encode(pattern_to_image(mark)));
    spit(cli.path("small_mark.png"),
         png_encode(pattern_to_image(testsupport::glyph_mark(16, 16, 9))));

    SUBCASE("usage errors exit with 1") {
        CHECK(cli.run("").code == 1);
        CHECK(cli.run("embed").code == 1);
        CHECK(cli.run("embed a b --mark m --mode bogus").code == 1);
        CHECK(cli.run("nonsense").code == 1);
    }

    SUBCASE("processing errors exit with 2 and write no output") {
        const auto r = cli.run("embed " + cli.path("missing.pdf").string() +
                               " " + cli.path("out.pdf").string() +
                               " --mark " + cli.path("mark.png").string());
        CHECK(r.code == 2);
        CHECK_FALSE(fs::exists(cli.path("out.pdf")));
    }

    SUBCASE("invalid spatial planes are usage errors") {
        const auto r = cli.run("embed " + cli.path("doc.pdf").string() + " " +
                               cli.path("out.pdf").string() + " --mark " +
                               cli.path("mark.png").string() +
                               " --plane-v 2 --plane-u 5");
        CHECK(r.code == 1);
    }

    SUBCASE("spatial embed then detect recovers the mark exactly") {
        auto r = cli.run("embed " + cli.path("doc.pdf").string() + " " +
                         cli.path("stego.pdf").string() + " --mode spatial " +
                         "--plane-v 3 --plane-u 1 --mark " +
                         cli.path("mark.png").string() + " --report " +
                         cli.path("embed.json").string());
        CHECK(r.code == 0);
        REQUIRE(fs::exists(cli.path("stego.pdf")));
        CHECK(slurp(cli.path("embed.json")).find("\"psnr\"") !=
              std::string::npos);

        r = cli.run("detect " + cli.path("stego.pdf").string() + " " +
                    cli.path("found.png").string() +
                    " --mode spatial --plane-v 3 --plane-u 1 --reference " +
                    cli.path("mark.png").string() + " --report " +
                    cli.path("detect.json").string());
        CHECK(r.code == 0);
        const std::string rep = slurp(cli.path("detect.json"));
        CHECK(rep.find("\"ham\": 0,") != std::string::npos);

        // the emitted mark file decodes back to the embedded pattern
        const std::string png = slurp(cli.path("found.png"));
        const auto detected = image_to_pattern(png_decode(
            std::vector<std::uint8_t>(png.begin(), png.end())));
        CHECK(hamming(mark, detected) == 0.0);
    }

    SUBCASE("identical invocations produce byte-identical outputs") {
        const std::string args =
            "embed " + cli.path("doc.pdf").string() + " ";
        auto r = cli.run(args + cli.path("o1.pdf").string() + " --mark " +
                         cli.path("mark.png").string());
        CHECK(r.code == 0);
        r = cli.run(args + cli.path("o2.pdf").string() + " --mark " +
                    cli.path("mark.png").string());
        CHECK(r.code == 0);
        CHECK(slurp(cli.path("o1.pdf")) == slurp(cli.path("o2.pdf")));
    }

    SUBCASE("undersized marks are resampled with a note") {
        const auto r = cli.run(
            "embed " + cli.path("doc.pdf").string() + " " +
            cli.path("stego2.pdf").string() + " --mark " +
            cli.path("small_mark.png").string());
        CHECK(r.code == 0);
        CHECK(r.err.find("resampled") != std::string::npos);

        // PDFWM_LOG=quiet silences the note
        const auto q = cli.run("embed " + cli.path("doc.pdf").string() + " " +
                                   cli.path("stego3.pdf").string() +
                                   " --mark " +
                                   cli.path("small_mark.png").string(),
                               "PDFWM_LOG=quiet");
        CHECK(q.code == 0);
        CHECK(q.err.empty());
    }

    SUBCASE("image selectors address one image or fail cleanly") {
        auto r = cli.run("embed " + cli.path("doc.pdf").string() + " " +
                         cli.path("sel.pdf").string() + " --image 0:0 " +
                         "--mark " + cli.path("mark.png").string());
        CHECK(r.code == 0);
        r = cli.run("embed " + cli.path("doc.pdf").string() + " " +
                    cli.path("sel2.pdf").string() + " --image 0:5 --mark " +
                    cli.path("mark.png").string());
        CHECK(r.code == 2);
        CHECK_FALSE(fs::exists(cli.path("sel2.pdf")));
        r = cli.run("embed " + cli.path("doc.pdf").string() + " " +
                    cli.path("sel3.pdf").string() + " --image bogus --mark " +
                    cli.path("mark.png").string());
        CHECK(r.code == 1);
    }

    SUBCASE("freq embed reports lower psnr at higher brightness") {
        auto extract_psnr = [&cli](const std::string& report) {
            const std::string text = slurp(cli.path(report));
            const auto pos = text.find("psnr = ");
            REQUIRE(pos != std::string::npos);
            return std::stod(text.substr(pos + 7));
        };
        auto r = cli.run("embed " + cli.path("doc.pdf").string() + " " +
                         cli.path("freq50.pdf").string() +
                         " --mode freq --wavelet db1 --fraction 0.7 "
                         "--brightness 50 --mark " +
                         cli.path("mark.png").string() + " --report " +
                         cli.path("r50.txt").string());
        CHECK(r.code == 0);
        r = cli.run("embed " + cli.path("doc.pdf").string() + " " +
                    cli.path("freq150.pdf").string() +
                    " --mode freq --wavelet db1 --fraction 0.7 "
                    "--brightness 150 --mark " +
                    cli.path("mark.png").string() + " --report " +
                    cli.path("r150.txt").string());
        CHECK(r.code == 0);
        CHECK(extract_psnr("r150.txt") < extract_psnr("r50.txt"));
    }

    SUBCASE("freq detect against a reference mark stays under 5 percent") {
        auto r = cli.run("embed " + cli.path("doc.pdf").string() + " " +
                         cli.path("freq20.pdf").string() +
                         " --mode freq --wavelet db1 --fraction 0.5 "
                         "--brightness 20 --mark " +
                         cli.path("small_mark.png").string());
        CHECK(r.code == 0);
        r = cli.run("detect " + cli.path("freq20.pdf").string() + " " +
                    cli.path("freqmark.png").string() +
                    " --mode freq --wavelet db1 --fraction 0.5 "
                    "--brightness 20 --reference " +
                    cli.path("small_mark.png").string() + " --report " +
                    cli.path("freqdet.txt").string());
        CHECK(r.code == 0);
        const std::string rep = slurp(cli.path("freqdet.txt"));
        const auto pos = rep.find("ham = ");
        REQUIRE(pos != std::string::npos);
        CHECK(std::stod(rep.substr(pos + 6)) < 0.05);
    }

    SUBCASE("detect on a clean duplicated-plane cover is all zeros") {
        auto clean = cover;
        SpatialParams p;
        p.plane_v = 3;
        p.plane_u = 1;
        spit(cli.path("clean.png"),
             png_encode(duplicate_plane(clean, p)));
        const auto r = cli.run("detect " + cli.path("clean.png").string() +
                               " " + cli.path("zeromark.png").string() +
                               " --mode spatial --plane-v 3 --plane-u 1");
        CHECK(r.code == 0);
        CHECK(r.err.find("empty") != std::string::npos);
        const std::string png = slurp(cli.path("zeromark.png"));
        const auto detected = image_to_pattern(png_decode(
            std::vector<std::uint8_t>(png.begin(), png.end())));
        for (auto b : detected.bits) CHECK(b == 0);
    }

    SUBCASE("remove restores a visible watermark") {
        auto r = cli.run("embed " + cli.path("doc.pdf").string() + " " +
                         cli.path("visible.pdf").string() +
                         " --mode spatial --plane-v 7 --plane-u 2 --mark " +
                         cli.path("mark.png").string());
        CHECK(r.code == 0);
        r = cli.run("remove " + cli.path("visible.pdf").string() + " " +
                    cli.path("restored.pdf").string() +
                    " --plane-v 7 --plane-u 2 --reference " +
                    cli.path("doc.pdf").string() + " --report " +
                    cli.path("remove.txt").string());
        CHECK(r.code == 0);
        const std::string rep = slurp(cli.path("remove.txt"));
        const auto pos = rep.find("psnr = ");
        REQUIRE(pos != std::string::npos);
        // plane U=2 removal lands near the analytic 45 dB for p ~= 0.5
        const double v = std::stod(rep.substr(pos + 7));
        CHECK(v > 40.0);
    }

    SUBCASE("sweep emits one row per parameter point") {
        auto r = cli.run("sweep " + cli.path("doc.pdf").string() +
                         " --mark " + cli.path("small_mark.png").string() +
                         " --wavelet db1 --brightness 20 --report " +
                         cli.path("sweep.tsv").string());
        CHECK(r.code == 0);
        const std::string table = slurp(cli.path("sweep.tsv"));
        CHECK(table.find("a\twavelet\tham\trelent\tpsnr\n") == 0);
        int rows = 0;
        for (char c : table)
            if (c == '\n') ++rows;
        CHECK(rows == 2);  // header + one data row

        r = cli.run("sweep " + cli.path("doc.pdf").string() + " --mark " +
                    cli.path("small_mark.png").string() +
                    " --wavelet db1,db2 --brightness 20:60:20");
        CHECK(r.code == 0);
        rows = 0;
        for (char c : r.out)
            if (c == '\n') ++rows;
        CHECK(rows == 7);  // header + 2 wavelets x 3 brightness points
    }

    SUBCASE("embed with --image all watermarks every image") {
        const auto a = testsupport::document_cover(64, 48, 41);
        const auto b = testsupport::document_cover(80, 56, 42);
        spit(cli.path("multi.pdf"),
             testsupport::make_pdf(
                 {testsupport::PageSpec{
                     {{a, testsupport::ImgEnc::flate},
                      {b, testsupport::ImgEnc::flate}}}}));
        auto r = cli.run("embed " + cli.path("multi.pdf").string() + " " +
                         cli.path("multi_stego.pdf").string() +
                         " --mode spatial --mark " +
                         cli.path("mark.png").string());
        CHECK(r.code == 0);
        for (const char* sel : {"0:0", "0:1"}) {
            r = cli.run("detect " + cli.path("multi_stego.pdf").string() +
                        " " + cli.path("multi_mark.png").string() +
                        " --mode spatial --image " + sel + " --reference " +
                        cli.path("mark.png").string() + " --report " +
                        cli.path("multi_detect.json").string());
            CHECK(r.code == 0);
            CHECK(slurp(cli.path("multi_detect.json")).find("\"ham\": 0,") !=
                  std::string::npos);
        }
    }

    SUBCASE("sweep over wavelet families ranks db1 best on a document page") {
        const auto r = cli.run("sweep " + cli.path("doc.pdf").string() +
                               " --mark " +
                               cli.path("small_mark.png").string() +
                               " --wavelet db1,db2,db6 --brightness 20");
        CHECK(r.code == 0);
        double ham_db1 = -1, ham_other_min = 2;
        std::size_t pos = 0;
        while ((pos = r.out.find('\n', pos)) != std::string::npos) {
            ++pos;
            const auto line_end = r.out.find('\n', pos);
            if (line_end == std::string::npos) break;
            const std::string line = r.out.substr(pos, line_end - pos);
            const auto t1 = line.find('\t');
            const auto t2 = line.find('\t', t1 + 1);
            const auto t3 = line.find('\t', t2 + 1);
            if (t3 == std::string::npos) continue;
            const std::string wavelet = line.substr(t1 + 1, t2 - t1 - 1);
            const double ham = std::stod(line.substr(t2 + 1, t3 - t2 - 1));
            if (wavelet == "db1")
                ham_db1 = ham;
            else
                ham_other_min = std::min(ham_other_min, ham);
        }
        REQUIRE(ham_db1 >= 0);
        CHECK(ham_db1 < ham_other_min);
    }

    SUBCASE("roundtrip prints a verdict per image") {
        const auto r = cli.run("roundtrip " + cli.path("doc.pdf").string());
        CHECK(r.code == 0);
        CHECK(r.out.find("PASS") != std::string::npos);
        CHECK(r.out.find("1 image(s), 0 failure(s)") != std::string::npos);
    }
}

TEST_SUITE_END();
