#include "omnivr/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "omnivr/dataset.hpp"
#include "omnivr/errors.hpp"
#include "omnivr/metrics.hpp"
#include "omnivr/pipeline.hpp"
#include "omnivr/png_io.hpp"
#include "omnivr/service.hpp"

namespace omnivr::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Raised for out-of-domain flag values detected after parsing.
struct UsageError : Error {
    using Error::Error;
};

Interpolator interpolator_flag(const std::string& name)
{
    const auto interp = parse_interpolator(name);
    if (!interp)
        throw UsageError("--interp must be slerp, bicubic or nearest (got " + name + ")");
    return *interp;
}

json matrix_json(const MobiusMatrix& m)
{
    auto c = [](const Complex& z) { return json::array({z.real(), z.imag()}); };
    return {{"a", c(m.a)}, {"b", c(m.b)}, {"c", c(m.c)}, {"d", c(m.d)}};
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct TransformArgs {
    std::string input, output, interp = "slerp";
    double beta = 0.0, gamma = 0.0, zoom = 1.0;
    int scale = 1;
    bool exact_weights = false;
    bool raw_weights = false;
};

struct ProjectArgs {
    std::string input, output, interp = "slerp";
    double yaw = 0.0, pitch = 0.0, fov = kHalfPi, zoom = 1.0;
    std::size_t width = 512, height = 512;
};

struct MetricsArgs {
    std::string reference, test;
};

struct DatasetArgs {
    std::string input_dir, output_dir, mode = "train-random";
    std::vector<std::string> inputs;
    int scale = 8;
    std::uint64_t seed = 0;
};

struct ServeArgs {
    std::string image, host = "127.0.0.1";
    int port = 8080;
};

int do_transform(const TransformArgs& a, std::ostream& out)
{
    const UserCommand cmd{a.beta, a.gamma, a.zoom};
    try {
        cmd.validate();
    } catch (const InvalidCommand& e) {
        throw UsageError(e.what());
    }
    if (!is_supported_factor(a.scale))
        throw UsageError("--scale must be one of 1, 2, 4, 8, 16");
    const Interpolator interp = interpolator_flag(a.interp);
    SlerpOptions options;
    options.weights = a.exact_weights ? SlerpWeights::exact : SlerpWeights::simplified;
    options.normalize = !a.raw_weights;

    const auto start = std::chrono::steady_clock::now();
    const Image img = read_png(a.input);
    const MobiusMatrix m = from_command(cmd);
    const Image result = transform_image(img, m, a.scale, interp, options);
    write_png(a.output, result);
    out << json{{"width", result.width()},
                {"height", result.height()},
                {"channels", result.channels()},
                {"matrix", matrix_json(m)},
                {"interp", std::string(to_string(interp))},
                {"elapsed_ms", elapsed_ms(start)}}
               .dump()
        << '\n';
    return 0;
}

int do_project(const ProjectArgs& a, std::ostream& out)
{
    service::ViewRequest req;
    req.camera = {a.yaw, a.pitch, a.fov, a.width, a.height};
    req.zoom = a.zoom;
    req.interp = interpolator_flag(a.interp);
    if (!(a.zoom > 0.0))
        throw UsageError("invalid command: zoom level must satisfy s > 0");
    try {
        req.camera.validate();
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }

    const auto start = std::chrono::steady_clock::now();
    const Image img = read_png(a.input);
    const std::vector<std::uint8_t> png = service::render_view_png(img, req);
    std::ofstream file(a.output, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open " + a.output + " for writing");
    file.write(reinterpret_cast<const char*>(png.data()), static_cast<std::streamsize>(png.size()));
    if (!file)
        throw IoError("failed writing " + a.output);
    out << json{{"width", a.width}, {"height", a.height}, {"elapsed_ms", elapsed_ms(start)}}.dump() << '\n';
    return 0;
}

int do_metrics(const MetricsArgs& a, std::ostream& out)
{
    const Image ref = read_png(a.reference);
    const Image test = read_png(a.test);
    out << evaluate(ref, test).to_json().dump() << '\n';
    return 0;
}

int do_dataset(const DatasetArgs& a, std::ostream& out)
{
    if (!is_supported_factor(a.scale))
        throw UsageError("--scale must be one of 1, 2, 4, 8, 16");
    DatasetMode mode;
    try {
        mode = parse_dataset_mode(a.mode);
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }
    std::vector<fs::path> inputs(a.inputs.begin(), a.inputs.end());
    if (!a.input_dir.empty()) {
        std::vector<fs::path> found;
        for (const auto& entry : fs::directory_iterator(a.input_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".png")
                found.push_back(entry.path());
        std::sort(found.begin(), found.end());
        inputs.insert(inputs.end(), found.begin(), found.end());
    }
    if (inputs.empty())
        throw UsageError("dataset: no input images (use --input-dir or --inputs)");
    const DatasetManifest manifest = generate_dataset(inputs, a.output_dir, a.scale, a.seed, mode);
    out << json{{"records", manifest.records.size()}, {"manifest", (fs::path(a.output_dir) / "manifest.json").string()}}
               .dump()
        << '\n';
    return 0;
}

int do_serve(const ServeArgs& a, std::ostream& out)
{
    service::ViewService svc(read_png(a.image), fs::path(a.image).filename().string());
    httplib::Server server;
    svc.mount(server);
    out << "serving " << a.image << " on http://" << a.host << ":" << a.port << std::endl;
    if (!server.listen(a.host, a.port))
        throw IoError("cannot listen on " + a.host + ":" + std::to_string(a.port));
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Möbius navigation and zoom for equirectangular panoramas", "omnivr"};
    app.require_subcommand(1);

    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "Apply a user command to an ERP image");
    transform->add_option("--input", ta.input, "Input ERP PNG")->required();
    transform->add_option("--output", ta.output, "Output PNG")->required();
    transform->add_option("--beta", ta.beta, "Horizontal rotation (radians)");
    transform->add_option("--gamma", ta.gamma, "Vertical rotation (radians)");
    transform->add_option("--zoom", ta.zoom, "Zoom level s > 0");
    transform->add_option("--scale", ta.scale, "Upsampling factor before the transform (1, 2, 4, 8, 16)");
    transform->add_option("--interp", ta.interp, "slerp | bicubic | nearest");
    transform->add_flag("--exact-weights", ta.exact_weights, "Use great-circle stage weights for slerp");
    transform->add_flag("--raw-weights", ta.raw_weights, "Do not normalize slerp stage weights");

    ProjectArgs pa;
    auto* project = app.add_subcommand("project", "Render a perspective view, optionally zoomed about its center");
    project->add_option("--input", pa.input, "Input ERP PNG")->required();
    project->add_option("--output", pa.output, "Output PNG")->required();
    project->add_option("--yaw", pa.yaw, "View longitude (radians)");
    project->add_option("--pitch", pa.pitch, "View latitude (radians)");
    project->add_option("--fov", pa.fov, "Horizontal field of view (radians)");
    project->add_option("--zoom", pa.zoom, "Magnification about the view center");
    project->add_option("--width", pa.width, "Output width");
    project->add_option("--height", pa.height, "Output height");
    project->add_option("--interp", pa.interp, "slerp | bicubic | nearest");

    MetricsArgs ma;
    auto* metrics = app.add_subcommand("metrics", "WS-PSNR and WS-SSIM of two ERP images");
    metrics->add_option("--reference", ma.reference, "Reference PNG")->required();
    metrics->add_option("--test", ma.test, "Test PNG")->required();

    DatasetArgs da;
    auto* dataset = app.add_subcommand("dataset", "Generate LR / transformed-HR training pairs");
    dataset->add_option("--input-dir", da.input_dir, "Directory of HR ERP PNGs");
    dataset->add_option("--inputs", da.inputs, "HR ERP PNG files");
    dataset->add_option("--output-dir", da.output_dir, "Output directory")->required();
    dataset->add_option("--scale", da.scale, "Downsampling factor");
    dataset->add_option("--seed", da.seed, "Random seed");
    dataset->add_option("--mode", da.mode, "train-random | eval-fixed");

    ServeArgs sa;
    auto* serve = app.add_subcommand("serve", "Serve perspective views over HTTP");
    serve->add_option("--image", sa.image, "ERP PNG to serve")->required();
    serve->add_option("--port", sa.port, "TCP port");
    serve->add_option("--host", sa.host, "Bind address");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*transform)
            return do_transform(ta, out);
        if (*project)
            return do_project(pa, out);
        if (*metrics)
            return do_metrics(ma, out);
        if (*dataset)
            return do_dataset(da, out);
        if (*serve)
            return do_serve(sa, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace omnivr::cli
