// pdfwm: embed, detect and remove watermarks in images carried inside PDF
// documents (or standalone PNG files), with distortion reports and
// parameter sweeps.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdfwm/errors.hpp"
#include "pdfwm/freq_embed.hpp"
#include "pdfwm/metrics.hpp"
#include "pdfwm/pdf/document.hpp"
#include "pdfwm/png_codec.hpp"
#include "pdfwm/spatial_embed.hpp"

using namespace pdfwm;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitProcessing = 2;

// PDFWM_LOG=quiet silences the informational notes on stderr.
bool quiet_log() {
    const char* v = std::getenv("PDFWM_LOG");
    return v && std::string(v) == "quiet";
}

void note(const std::string& msg) {
    if (!quiet_log()) std::fprintf(stderr, "note: %s\n", msg.c_str());
}

struct Selector {
    bool all = true;
    int page = 0;
    int index = 0;
};

struct Options {
    std::string input;
    std::string output;
    std::string mode = "spatial";
    int plane_v = 3;
    int plane_u = 1;
    std::string wavelet = "db1";
    std::string band = "cD";
    double fraction = 0.5;
    double brightness = 20.0;
    std::string channel;  // r|g|b|all; empty = per-mode default
    std::string mark_path;
    std::string image_sel = "all";
    std::string report_path;
    std::string reference_path;
    std::string wavelet_list = "db1";
    std::string brightness_range = "20:300:20";
};

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
}

// temp file plus rename, so a failed run never leaves a half-written output
void write_file_atomic(const std::string& path,
                       const std::vector<std::uint8_t>& bytes) {
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) throw Error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

void write_text_atomic(const std::string& path, const std::string& text) {
    write_file_atomic(path,
                      std::vector<std::uint8_t>(text.begin(), text.end()));
}

bool is_pdf(const std::vector<std::uint8_t>& bytes) {
    return bytes.size() >= 5 &&
           std::string_view(reinterpret_cast<const char*>(bytes.data()), 5) ==
               "%PDF-";
}

Selector parse_selector(const std::string& s) {
    Selector sel;
    if (s == "all") return sel;
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw InvalidParams("--image expects \"page:index\" or \"all\"");
    auto to_int = [](const std::string& tok) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw InvalidParams("--image expects numeric page:index");
        }
        if (used != tok.size() || v < 0)
            throw InvalidParams("--image expects non-negative page:index");
        return v;
    };
    sel.page = to_int(s.substr(0, colon));
    sel.index = to_int(s.substr(colon + 1));
    sel.all = false;
    return sel;
}

ChannelPolicy parse_channel(const std::string& s, bool freq_mode) {
    if (s.empty())
        return freq_mode ? ChannelPolicy::single(2) : ChannelPolicy::all();
    if (s == "all") return ChannelPolicy::all();
    if (s == "r") return ChannelPolicy::single(0);
    if (s == "g") return ChannelPolicy::single(1);
    if (s == "b") return ChannelPolicy::single(2);
    throw InvalidParams("--channel expects r, g, b or all");
}

SpatialParams spatial_params(const Options& o) {
    SpatialParams p;
    p.plane_v = o.plane_v;
    p.plane_u = o.plane_u;
    p.channels = parse_channel(o.channel, false);
    p.validate();
    return p;
}

FreqParams freq_params(const Options& o) {
    FreqParams p;
    p.wavelet = WaveletSpec::parse(o.wavelet);
    p.band = band_from_name(o.band);
    p.fraction = o.fraction;
    p.brightness = o.brightness;
    p.channels = parse_channel(o.channel, true);
    p.validate();
    return p;
}

BinaryPattern load_mark(const std::string& path) {
    const auto bytes = read_file(path);
    if (!looks_like_png(bytes.data(), bytes.size()))
        throw DecodeError(path + " is not a PNG file");
    return image_to_pattern(png_decode(bytes), 128);
}

// images selected for processing; unsupported codecs are dropped with a
// note and an image object shared by several pages is processed once
std::vector<pdf::PdfImageRef> select_images(const pdf::Document& doc,
                                            const Selector& sel) {
    std::vector<pdf::PdfImageRef> out;
    std::vector<pdf::PdfImageRef> refs = doc.list_images();
    if (sel.all) {
        std::set<int> seen_objects;
        for (const auto& r : refs) {
            if (r.codec == pdf::ImageCodec::other) {
                note("skipping image page=" + std::to_string(r.page_index) +
                     " object=" + std::to_string(r.object_num) +
                     " (unsupported encoding)");
                continue;
            }
            if (!seen_objects.insert(r.object_num).second) continue;
            out.push_back(r);
        }
        if (out.empty()) throw Error("no supported images in document");
        return out;
    }
    int seen = 0;
    for (const auto& r : refs) {
        if (r.page_index != sel.page) continue;
        if (seen++ == sel.index) {
            if (r.codec == pdf::ImageCodec::other)
                throw UnsupportedCodec("selected image has an unsupported "
                                       "encoding");
            out.push_back(r);
            return out;
        }
    }
    throw Error("no image at page " + std::to_string(sel.page) + " index " +
                std::to_string(sel.index));
}

std::string report_header(const char* command) {
    return std::string("# pdfwm ") + command + " report\n";
}

void emit_report(const std::string& path, const std::string& text,
                 const std::string& json) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        write_text_atomic(path, json);
    else
        write_text_atomic(path, text);
}

struct PerImageReport {
    int page = -1;
    int object = -1;
    DistortionReport metrics;
};

std::string reports_to_text(const char* command,
                            const std::vector<PerImageReport>& reports) {
    std::string out = report_header(command);
    for (const auto& r : reports) {
        if (r.page >= 0)
            out += "image page = " + std::to_string(r.page) +
                   ", object = " + std::to_string(r.object) + "\n";
        out += r.metrics.to_text();
    }
    return out;
}

std::string reports_to_json(const char* command,
                            const std::vector<PerImageReport>& reports) {
    std::string out = "{\"command\": \"";
    out += command;
    out += "\", \"images\": [";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out += ", ";
        out += "{";
        if (reports[i].page >= 0)
            out += "\"page\": " + std::to_string(reports[i].page) +
                   ", \"object\": " + std::to_string(reports[i].object) +
                   ", ";
        out += "\"metrics\": " + reports[i].metrics.to_json();
        out += "}";
    }
    out += "]}\n";
    return out;
}

RasterImage embed_one(const RasterImage& cover, const BinaryPattern& mark,
                      const Options& o) {
    if (o.mode == "spatial") return embed_spatial(cover, mark, spatial_params(o));
    if (o.mode == "freq") return embed_frequency(cover, mark, freq_params(o));
    throw InvalidParams("--mode expects spatial or freq");
}

int cmd_embed(const Options& o) {
    const auto mark = load_mark(o.mark_path);
    const auto input = read_file(o.input);
    std::vector<PerImageReport> reports;

    if (is_pdf(input)) {
        pdf::Document doc = pdf::Document::load(input);
        const auto selected = select_images(doc, parse_selector(o.image_sel));
        std::vector<std::uint8_t> bytes = doc.bytes();
        for (const auto& ref : selected) {
            pdf::Document cur = pdf::Document::load(bytes);
            const RasterImage cover = cur.extract_image(ref);
            if (cover.width != mark.cols || cover.height != mark.rows)
                note("mark resampled from " + std::to_string(mark.cols) +
                     "x" + std::to_string(mark.rows) + " to " +
                     std::to_string(cover.width) + "x" +
                     std::to_string(cover.height));
            const RasterImage stego = embed_one(cover, mark, o);
            bytes = cur.replace_image(ref, stego);
            PerImageReport r;
            r.page = ref.page_index;
            r.object = ref.object_num;
            r.metrics = compare_images(cover, stego);
            reports.push_back(std::move(r));
        }
        write_file_atomic(o.output, bytes);
    } else if (looks_like_png(input.data(), input.size())) {
        const RasterImage cover = png_decode(input);
        if (cover.width != mark.cols || cover.height != mark.rows)
            note("mark resampled from " + std::to_string(mark.cols) + "x" +
                 std::to_string(mark.rows) + " to " +
                 std::to_string(cover.width) + "x" +
                 std::to_string(cover.height));
        const RasterImage stego = embed_one(cover, mark, o);
        write_file_atomic(o.output, png_encode(stego));
        PerImageReport r;
        r.metrics = compare_images(cover, stego);
        reports.push_back(std::move(r));
    } else {
        throw Error(o.input + " is neither a PDF nor a PNG");
    }
    emit_report(o.report_path, reports_to_text("embed", reports),
                reports_to_json("embed", reports));
    return kExitOk;
}

int cmd_detect(const Options& o) {
    const auto input = read_file(o.input);
    RasterImage stego;
    PerImageReport rep;
    if (is_pdf(input)) {
        const pdf::Document doc = pdf::Document::load(input);
        const auto selected = select_images(doc, parse_selector(o.image_sel));
        const auto& ref = selected.front();  // one mark file per run
        stego = doc.extract_image(ref);
        rep.page = ref.page_index;
        rep.object = ref.object_num;
    } else if (looks_like_png(input.data(), input.size())) {
        stego = png_decode(input);
    } else {
        throw Error(o.input + " is neither a PDF nor a PNG");
    }

    std::optional<BinaryPattern> reference;
    if (!o.reference_path.empty()) reference = load_mark(o.reference_path);

    BinaryPattern detected;
    if (o.mode == "spatial") {
        detected = detect_spatial(stego, spatial_params(o));
        if (reference)
            reference = resample_nearest(*reference, detected.rows,
                                         detected.cols);
    } else if (o.mode == "freq") {
        const FreqParams p = freq_params(o);
        if (reference) {
            detected = detect_frequency(stego, p, reference->rows,
                                        reference->cols);
        } else {
            // without a reference the mark comes back at region resolution
            const SubbandSet bands = dwt2(channel_to_mat(stego, 0),
                                          p.wavelet);
            const Mat& band = select_band(bands, p.band);
            const RegionSpec region = select_region(
                band.rows(), band.cols(), p.fraction, 1, 1);
            detected = detect_frequency(stego, p, region.row_count,
                                        region.col_count);
        }
    } else {
        throw InvalidParams("--mode expects spatial or freq");
    }

    double ones = 0;
    for (auto b : detected.bits) ones += b;
    ones /= static_cast<double>(detected.bits.size());
    if (ones == 0.0)
        note("detected mark is empty; the input may be unwatermarked");
    else if (ones > 0.4 && ones < 0.6 && o.mode == "spatial")
        note("detected mark looks random; the input may be unwatermarked");

    write_file_atomic(o.output, png_encode(pattern_to_image(detected)));
    if (reference) rep.metrics = compare_marks(*reference, detected);
    emit_report(o.report_path, reports_to_text("detect", {rep}),
                reports_to_json("detect", {rep}));
    return kExitOk;
}

int cmd_remove(const Options& o) {
    if (o.mode != "spatial")
        throw InvalidParams("remove applies to the spatial scheme only");
    const SpatialParams p = spatial_params(o);
    const auto input = read_file(o.input);

    std::optional<pdf::Document> refdoc;
    std::optional<RasterImage> refpng;
    if (!o.reference_path.empty()) {
        const auto refbytes = read_file(o.reference_path);
        if (is_pdf(refbytes))
            refdoc = pdf::Document::load(refbytes);
        else
            refpng = png_decode(refbytes);
    }

    std::vector<PerImageReport> reports;
    if (is_pdf(input)) {
        pdf::Document doc = pdf::Document::load(input);
        const auto selected = select_images(doc, parse_selector(o.image_sel));
        std::vector<std::uint8_t> bytes = doc.bytes();
        for (const auto& ref : selected) {
            pdf::Document cur = pdf::Document::load(bytes);
            const RasterImage stego = cur.extract_image(ref);
            const RasterImage restored = remove_spatial(stego, p);
            bytes = cur.replace_image(ref, restored);
            PerImageReport r;
            r.page = ref.page_index;
            r.object = ref.object_num;
            if (refdoc) {
                for (const auto& rr : refdoc->list_images()) {
                    if (rr.page_index == ref.page_index &&
                        rr.object_num == ref.object_num) {
                        r.metrics = compare_images(
                            refdoc->extract_image(rr), restored);
                        break;
                    }
                }
            }
            reports.push_back(std::move(r));
        }
        write_file_atomic(o.output, bytes);
    } else if (looks_like_png(input.data(), input.size())) {
        const RasterImage stego = png_decode(input);
        const RasterImage restored = remove_spatial(stego, p);
        write_file_atomic(o.output, png_encode(restored));
        PerImageReport r;
        if (refpng) r.metrics = compare_images(*refpng, restored);
        reports.push_back(std::move(r));
    } else {
        throw Error(o.input + " is neither a PDF nor a PNG");
    }
    emit_report(o.report_path, reports_to_text("remove", reports),
                reports_to_json("remove", reports));
    return kExitOk;
}

double strict_stod(const std::string& tok) {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
}

std::vector<double> parse_brightness_range(const std::string& s) {
    std::vector<double> out;
    const auto c1 = s.find(':');
    try {
        if (c1 == std::string::npos) {
            // comma-separated list or a single value
            std::size_t pos = 0;
            while (pos <= s.size()) {
                const auto comma = s.find(',', pos);
                const std::string tok =
                    s.substr(pos, comma == std::string::npos ? std::string::npos
                                                             : comma - pos);
                out.push_back(strict_stod(tok));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else {
            const auto c2 = s.find(':', c1 + 1);
            if (c2 == std::string::npos)
                throw InvalidParams("--brightness range is start:stop:step");
            const double start = strict_stod(s.substr(0, c1));
            const double stop = strict_stod(s.substr(c1 + 1, c2 - c1 - 1));
            const double step = strict_stod(s.substr(c2 + 1));
            if (step <= 0) throw InvalidParams("--brightness step must be > 0");
            for (double a = start; a <= stop + 1e-9; a += step)
                out.push_back(a);
        }
    } catch (const InvalidParams&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidParams("cannot parse --brightness value: " + s);
    }
    if (out.empty()) throw InvalidParams("empty --brightness range");
    return out;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        out.push_back(s.substr(pos, comma == std::string::npos
                                        ? std::string::npos
                                        : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int cmd_sweep(const Options& o) {
    const auto mark = load_mark(o.mark_path);
    const auto input = read_file(o.input);
    RasterImage cover;
    if (is_pdf(input)) {
        const pdf::Document doc = pdf::Document::load(input);
        const auto selected = select_images(doc, parse_selector(o.image_sel));
        cover = doc.extract_image(selected.front());
    } else if (looks_like_png(input.data(), input.size())) {
        cover = png_decode(input);
    } else {
        throw Error(o.input + " is neither a PDF nor a PNG");
    }

    const auto brightnesses = parse_brightness_range(o.brightness_range);
    const auto wavelets = split_commas(o.wavelet_list);

    std::string table = "a\twavelet\tham\trelent\tpsnr\n";
    for (const std::string& wname : wavelets) {
        FreqParams p;
        p.wavelet = WaveletSpec::parse(wname);
        p.band = band_from_name(o.band);
        p.fraction = o.fraction;
        p.channels = parse_channel(o.channel, true);
        for (double a : brightnesses) {
            p.brightness = a;
            p.validate();
            const RasterImage stego = embed_frequency(cover, mark, p);
            const BinaryPattern detected =
                detect_frequency(stego, p, mark.rows, mark.cols);
            char row[160];
            std::snprintf(row, sizeof(row), "%.10g\t%s\t%.10g\t%.10g\t%.10g\n",
                          a, wname.c_str(), hamming(mark, detected),
                          relative_entropy(pattern_to_image(mark),
                                           pattern_to_image(detected)),
                          psnr(cover, stego));
            table += row;
        }
    }
    if (o.report_path.empty())
        std::fputs(table.c_str(), stdout);
    else
        write_text_atomic(o.report_path, table);
    return kExitOk;
}

int cmd_roundtrip(const Options& o) {
    const auto input = read_file(o.input);
    if (!is_pdf(input)) throw Error(o.input + " is not a PDF");
    const auto results = pdf::roundtrip_check(input);
    int failed = 0;
    for (const auto& r : results) {
        const char* verdict = !r.supported ? "SKIP" : r.pass ? "PASS" : "FAIL";
        if (r.supported && !r.pass) ++failed;
        std::printf("%s page=%d object=%d codec=%s %dx%d\n", verdict,
                    r.ref.page_index, r.ref.object_num,
                    pdf::codec_name(r.ref.codec), r.ref.width, r.ref.height);
    }
    std::printf("%zu image(s), %d failure(s)\n", results.size(), failed);
    return failed == 0 ? kExitOk : kExitProcessing;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"watermark images inside PDF documents (spatial bit-plane "
                 "and DWT subband schemes)"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* cmd, bool with_mode, bool sweep_variant) {
        if (with_mode) {
            cmd->add_option("--mode", o.mode, "spatial|freq")
                ->check(CLI::IsMember({"spatial", "freq"}));
            cmd->add_option("--plane-v", o.plane_v,
                            "embedding bit plane, 1..8 (spatial)");
            cmd->add_option("--plane-u", o.plane_u,
                            "copy-slot bit plane, below V (spatial)");
        }
        if (sweep_variant) {
            cmd->add_option("--wavelet", o.wavelet_list,
                            "comma-separated list, e.g. db1,db6");
            cmd->add_option("--brightness", o.brightness_range,
                            "start:stop:step or comma list");
        } else {
            cmd->add_option("--wavelet", o.wavelet,
                            "db1..db45 or sym2..sym20");
            cmd->add_option("--brightness", o.brightness,
                            "mark brightness a > 0 (freq)");
        }
        cmd->add_option("--band", o.band, "cA|cH|cV|cD")
            ->check(CLI::IsMember({"cA", "cH", "cV", "cD"}));
        cmd->add_option("--fraction", o.fraction,
                        "band fraction u in (0,1] (freq)");
        cmd->add_option("--channel", o.channel, "r|g|b|all");
        cmd->add_option("--image", o.image_sel,
                        "page:index or all (default all)");
        cmd->add_option("--report", o.report_path,
                        "report file (.json for JSON, else text)");
    };

    CLI::App* embed = app.add_subcommand("embed", "embed a watermark");
    embed->add_option("input", o.input, "PDF or PNG")->required();
    embed->add_option("output", o.output, "watermarked document")->required();
    embed->add_option("--mark", o.mark_path, "binary mark image (PNG)")
        ->required();
    add_common(embed, true, false);

    CLI::App* detect = app.add_subcommand("detect", "extract a watermark");
    detect->add_option("input", o.input, "PDF or PNG")->required();
    detect->add_option("mark-output", o.output, "detected mark (PNG)")
        ->required();
    detect->add_option("--reference", o.reference_path,
                       "reference mark for the error report");
    add_common(detect, true, false);

    CLI::App* remove = app.add_subcommand(
        "remove", "remove a visible spatial watermark");
    remove->add_option("input", o.input, "PDF or PNG")->required();
    remove->add_option("output", o.output, "restored document")->required();
    remove->add_option("--reference", o.reference_path,
                       "original document for the PSNR report");
    add_common(remove, true, false);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "ham/relent/psnr table over brightness and wavelets");
    sweep->add_option("input", o.input, "PDF or PNG cover source")->required();
    sweep->add_option("--mark", o.mark_path, "binary mark image (PNG)")
        ->required();
    add_common(sweep, false, true);

    CLI::App* roundtrip = app.add_subcommand(
        "roundtrip", "verify lossless extract/reinsert per image");
    roundtrip->add_option("input", o.input, "PDF")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand("embed")) return cmd_embed(o);
        if (app.got_subcommand("detect")) return cmd_detect(o);
        if (app.got_subcommand("remove")) return cmd_remove(o);
        if (app.got_subcommand("sweep")) return cmd_sweep(o);
        if (app.got_subcommand("roundtrip")) return cmd_roundtrip(o);
        return kExitUsage;
    } catch (const InvalidParams& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const UnsupportedWavelet& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const PlaneOutOfRange& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitProcessing;
    }
}
