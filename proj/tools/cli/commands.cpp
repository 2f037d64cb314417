#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "traysight/error.hpp"
#include "traysight/evaluation.hpp"
#include "traysight/imaging.hpp"
#include "traysight/placement.hpp"
#include "traysight/presence.hpp"
#include "traysight/synthgen.hpp"
#include "traysight/tray_grid.hpp"

namespace traysight::cli {

namespace fs = std::filesystem;

namespace {

constexpr Rgb kOccupiedColor{0, 200, 0};
constexpr Rgb kEmptyColor{200, 0, 0};
constexpr Rgb kBackgroundColor{90, 90, 90};

std::string read_text(const fs::path& path) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) throw Error(ErrorCode::FileNotFound, path.string());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot open for writing: " + path.string());
    out << text;
    if (!out) throw Error(ErrorCode::Io, "write failed: " + path.string());
}

std::string fixed4(double v) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(4) << v;
    return ss.str();
}

void require_token(const std::string& what, const std::string& value) {
    const bool ok = !value.empty() && std::none_of(value.begin(), value.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
    });
    if (!ok) throw Error(ErrorCode::InvalidArgument, what + " must be a non-empty token without spaces");
}

Rect parse_roi(const std::string& text) {
    std::vector<std::string> parts;
    std::istringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 4 || text.back() == ',') {
        throw Error(ErrorCode::InvalidArgument, "--roi expects x,y,w,h, got '" + text + "'");
    }
    int v[4];
    for (std::size_t i = 0; i < 4; ++i) {
        try {
            std::size_t used = 0;
            v[i] = std::stoi(parts[i], &used);
            if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::InvalidArgument, "--roi field '" + parts[i] + "' is not an integer");
        }
    }
    Rect r{v[0], v[1], v[2], v[3]};
    validate(r);
    return r;
}

// A single directory argument expands to its .pgm/.ppm/.pnm files in name order.
std::vector<fs::path> expand_samples(const std::vector<std::string>& args) {
    std::error_code ec;
    if (args.size() == 1 && fs::is_directory(args.front(), ec)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(args.front())) {
            if (!entry.is_regular_file()) continue;
            auto ext = entry.path().extension().string();
            std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
            if (ext == ".pgm" || ext == ".ppm" || ext == ".pnm") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        return files;
    }
    return {args.begin(), args.end()};
}

std::string ascii_map(const TrayLayout& layout, const OccupancyResult& result) {
    std::string out;
    const auto cols = static_cast<std::size_t>(layout.cols);
    for (std::size_t i = 0; i < result.size(); ++i) {
        out.push_back(result.bits[i] ? '#' : '.');
        if ((i + 1) % cols == 0) out.push_back('\n');
    }
    return out;
}

RgbImage render_map(const GrayImage& image, const TrayLayout& layout, const OccupancyResult& result) {
    RgbImage map(image.width(), image.height(), kBackgroundColor);
    for (std::size_t i = 0; i < result.size(); ++i) {
        map.fill(slot_rect(layout, i), result.bits[i] ? kOccupiedColor : kEmptyColor);
    }
    return map;
}

struct CalibratePresenceArgs {
    std::string with_path, without_path, layout_path, out_path;
};

int calibrate_presence_cmd(const CalibratePresenceArgs& a, std::ostream&, std::ostream& err) {
    const auto layout = load_layout(a.layout_path);
    const auto refs = calibrate_presence(load_gray_image(a.with_path), load_gray_image(a.without_path), layout);
    write_text(a.out_path, save_presence_refs(refs));
    err << "wrote " << refs.slots().size() << " slot references to " << a.out_path << "\n";
    return kExitOk;
}

struct InspectArgs {
    std::string image_path, layout_path, refs_path, tray_id, map_path, labels_path;
    double outlier_k = kDefaultOutlierK;
};

int inspect_cmd(const InspectArgs& a, std::ostream& out, std::ostream& err) {
    require_token("--tray-id", a.tray_id);
    const auto layout = load_layout(a.layout_path);
    const auto refs = load_presence_refs(read_text(a.refs_path));
    const auto image = load_gray_image(a.image_path);
    const auto result = inspect_tray(image, layout, refs, a.outlier_k);

    if (!a.map_path.empty()) save_ppm(a.map_path, render_map(image, layout, result));
    if (!a.labels_path.empty()) {
        std::vector<bool> bits(result.bits.begin(), result.bits.end());
        write_text(a.labels_path, format_labels(truth_records(a.tray_id, bits)));
    }

    out << "PRESENCE " << a.tray_id << " " << result.bitstring() << "\n";
    for (std::size_t i = 0; i < result.size(); ++i) {
        if (result.warnings[i]) err << "WARN slot " << (i + 1) << " outlier\n";
    }
    err << ascii_map(layout, result);
    return kExitOk;
}

struct CalibratePlacementArgs {
    std::vector<std::string> samples;
    std::string roi, out_path;
    double z = kDefaultZ;
    std::size_t min_n = kDefaultMinSamples;
    double eps_floor = kDefaultEpsFloor;
};

int calibrate_placement_cmd(const CalibratePlacementArgs& a, std::ostream&, std::ostream& err) {
    const auto roi = parse_roi(a.roi);
    std::vector<GrayImage> images;
    for (const auto& p : expand_samples(a.samples)) images.push_back(load_gray_image(p));
    const auto cal = calibrate_placement(images, roi, {a.z, a.min_n, a.eps_floor});
    write_text(a.out_path, save_placement_model(cal.model));
    if (cal.warning) err << "WARN " << *cal.warning << "\n";
    err << "placement model n=" << cal.model.n << " mean=" << fixed4(cal.model.mean_value)
        << " std=" << fixed4(cal.model.std_value) << " threshold=" << fixed4(cal.model.threshold()) << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string image_path, model_path, id;
};

int verify_cmd(const VerifyArgs& a, std::ostream& out, std::ostream&) {
    require_token("--id", a.id);
    const auto model = load_placement_model(read_text(a.model_path));
    const auto v = verify_placement(load_gray_image(a.image_path), model);
    if (v.correct) {
        out << "PLACEMENT " << a.id << " OK\n";
        return kExitOk;
    }
    out << "PLACEMENT " << a.id << " NG value=" << fixed4(v.value) << " mean=" << fixed4(model.mean_value)
        << " threshold=" << fixed4(v.threshold) << "\n";
    return kExitNg;
}

struct EvaluateArgs {
    std::string pred_path, truth_path;
};

int evaluate_cmd(const EvaluateArgs& a, std::ostream& out, std::ostream&) {
    const auto pred = parse_labels(read_text(a.pred_path));
    const auto truth = parse_labels(read_text(a.truth_path));
    const auto [p, t] = join_labels(pred, truth);
    const auto cm = tally(p, t);
    const auto m = metrics(cm);
    out << "TP " << cm.tp << " FN " << cm.fn << " FP " << cm.fp << " TN " << cm.tn << "\n";
    out << "accuracy " << format_metric(m.accuracy) << " precision " << format_metric(m.precision)
        << " recall " << format_metric(m.recall) << "\n";
    return kExitOk;
}

struct SynthArgs {
    std::string scene_path, out_dir;
    bool require_separable = false;
};

int synth_cmd(const SynthArgs& a, std::ostream&, std::ostream& err) {
    const auto manifest = parse_scene_manifest(read_text(a.scene_path));
    const fs::path dir(a.out_dir);
    fs::create_directories(dir);

    if (manifest.kind == SceneManifest::Kind::Tray) {
        validate(manifest.tray, a.require_separable);
        const auto scene = generate_tray(manifest.tray);
        save_pgm(dir / (manifest.id + ".pgm"), scene.image);
        write_text(dir / (manifest.id + ".truth"), format_labels(truth_records(manifest.id, scene.truth)));
        err << "wrote tray " << manifest.id << " (" << scene.image.width() << "x" << scene.image.height()
            << ", " << scene.truth.size() << " slots) to " << dir.string() << "\n";
    } else {
        const auto series = generate_socket_series(manifest.socket);
        for (std::size_t i = 0; i < series.size(); ++i) {
            std::ostringstream name;
            name << manifest.id << "_" << std::setw(4) << std::setfill('0') << i << ".pgm";
            save_pgm(dir / name.str(), series[i]);
        }
        err << "wrote " << series.size() << " socket images " << manifest.id << "_*.pgm to " << dir.string()
            << "\n";
    }
    write_text(dir / (manifest.id + ".scene"), format_scene_manifest(manifest));
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"traysight: histogram-based presence and placement inspection", "traysight"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    std::function<int()> action;

    CalibratePresenceArgs cp;
    auto* c1 = app.add_subcommand("calibrate-presence", "Measure per-slot occupied/empty references");
    c1->add_option("--with", cp.with_path, "Tray image with every pocket occupied")->required();
    c1->add_option("--without", cp.without_path, "Tray image with every pocket empty")->required();
    c1->add_option("--layout", cp.layout_path, "Tray layout config")->required();
    c1->add_option("--out", cp.out_path, "Reference store to write")->required();
    c1->callback([&] { action = [&] { return calibrate_presence_cmd(cp, out, err); }; });

    InspectArgs in;
    auto* c2 = app.add_subcommand("inspect", "Classify every slot of a tray image");
    c2->add_option("--image", in.image_path, "Tray image (P5/P6)")->required();
    c2->add_option("--layout", in.layout_path, "Tray layout config")->required();
    c2->add_option("--refs", in.refs_path, "Presence reference store")->required();
    c2->add_option("--tray-id", in.tray_id, "Tray identifier for the verdict line")->required();
    c2->add_option("--map", in.map_path, "Write a P6 occupancy map");
    c2->add_option("--labels-out", in.labels_path, "Write per-slot '<id> <0|1>' predictions");
    c2->add_option("--outlier-k", in.outlier_k, "Outlier warning factor")->capture_default_str();
    c2->callback([&] { action = [&] { return inspect_cmd(in, out, err); }; });

    CalibratePlacementArgs pl;
    auto* c3 = app.add_subcommand("calibrate-placement", "Fit the socket placement model");
    c3->add_option("--samples", pl.samples, "Sample images, or one directory of them")->required()->expected(1, -1);
    c3->add_option("--roi", pl.roi, "Module region as x,y,w,h")->required();
    c3->add_option("--z", pl.z, "Acceptance z value")->capture_default_str();
    c3->add_option("--min-n", pl.min_n, "Warn below this many samples")->capture_default_str();
    c3->add_option("--eps-floor", pl.eps_floor, "Minimum acceptance half-band")->capture_default_str();
    c3->add_option("--out", pl.out_path, "Model store to write")->required();
    c3->callback([&] { action = [&] { return calibrate_placement_cmd(pl, out, err); }; });

    VerifyArgs vf;
    auto* c4 = app.add_subcommand("verify", "Check one socket image against the placement model");
    c4->add_option("--image", vf.image_path, "Socket image (P5/P6)")->required();
    c4->add_option("--model", vf.model_path, "Placement model store")->required();
    c4->add_option("--id", vf.id, "Identifier for the verdict line")->required();
    c4->callback([&] { action = [&] { return verify_cmd(vf, out, err); }; });

    EvaluateArgs ev;
    auto* c5 = app.add_subcommand("evaluate", "Confusion matrix and accuracy/precision/recall");
    c5->add_option("--pred", ev.pred_path, "Predictions '<id> <0|1>'")->required();
    c5->add_option("--truth", ev.truth_path, "Ground truth '<id> <0|1>'")->required();
    c5->callback([&] { action = [&] { return evaluate_cmd(ev, out, err); }; });

    SynthArgs sy;
    auto* c6 = app.add_subcommand("synth", "Generate synthetic tray or socket images");
    c6->add_option("--scene", sy.scene_path, "Scene manifest")->required();
    c6->add_option("--out-dir", sy.out_dir, "Output directory")->required();
    c6->add_flag("--require-separable", sy.require_separable, "Reject scenes with mu_with == mu_without");
    c6->callback([&] { action = [&] { return synth_cmd(sy, out, err); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
    }

    try {
        return action ? action() : kExitError;
    } catch (const Error& e) {
        err << "traysight: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "traysight: " << e.what() << "\n";
    }
    return kExitError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("traysight");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace traysight::cli
