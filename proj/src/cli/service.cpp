#include "omnivr/service.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <string_view>

#include <httplib.h>

#include "omnivr/errors.hpp"
#include "omnivr/png_io.hpp"

namespace omnivr::service {

namespace {

std::optional<double> parse_double(std::string_view s)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

std::optional<std::size_t> parse_size(std::string_view s)
{
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

void send_error(httplib::Response& res, int status, const std::string& message)
{
    res.status = status;
    res.set_content(nlohmann::json{{"error", message}}.dump(), "application/json");
}

} // namespace

std::variant<ViewRequest, HttpError> parse_view_request(const std::multimap<std::string, std::string>& params)
{
    ViewRequest req;
    double* angles[] = {&req.camera.yaw, &req.camera.pitch, &req.camera.fov_h, &req.zoom};
    const char* angle_names[] = {"yaw", "pitch", "fov", "zoom"};
    for (int k = 0; k < 4; ++k) {
        const auto it = params.find(angle_names[k]);
        if (it == params.end())
            continue;
        const auto v = parse_double(it->second);
        if (!v)
            return HttpError{400, std::string("malformed number for ") + angle_names[k] + ": '" + it->second + "'"};
        *angles[k] = *v;
    }
    std::size_t* dims[] = {&req.camera.out_w, &req.camera.out_h};
    const char* dim_names[] = {"w", "h"};
    for (int k = 0; k < 2; ++k) {
        const auto it = params.find(dim_names[k]);
        if (it == params.end())
            continue;
        const auto v = parse_size(it->second);
        if (!v || *v == 0)
            return HttpError{400, std::string("malformed size for ") + dim_names[k] + ": '" + it->second + "'"};
        *dims[k] = *v;
    }
    if (const auto it = params.find("interp"); it != params.end()) {
        const auto interp = parse_interpolator(it->second);
        if (!interp)
            return HttpError{400, "interp must be slerp, bicubic or nearest"};
        req.interp = *interp;
    }
    if (req.camera.out_w > kMaxViewPixels / req.camera.out_h)
        return HttpError{413, "requested raster exceeds 4096^2 pixels"};
    if (!(req.zoom > 0.0))
        return HttpError{422, "zoom level must satisfy s > 0"};
    try {
        req.camera.validate();
    } catch (const ConfigError& e) {
        return HttpError{400, e.what()};
    }
    return req;
}

std::vector<std::uint8_t> render_view_png(const Image& img, const ViewRequest& req)
{
    return encode_png(render_view(img, req.camera, req.zoom, req.interp));
}

ViewService::ViewService(Image image, std::string name)
{
    replace_image(std::move(image), std::move(name));
}

void ViewService::replace_image(Image image, std::string name)
{
    require_erp(image, "panorama");
    auto next = std::make_shared<const Image>(std::move(image));
    std::lock_guard lock(mutex_);
    image_ = std::move(next);
    name_ = std::move(name);
}

std::shared_ptr<const Image> ViewService::snapshot() const
{
    std::lock_guard lock(mutex_);
    return image_;
}

nlohmann::json ViewService::meta() const
{
    std::lock_guard lock(mutex_);
    return {{"width", image_->width()}, {"height", image_->height()}, {"name", name_}};
}

void ViewService::mount(httplib::Server& server)
{
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});

    server.Get("/api/meta", [this](const httplib::Request&, httplib::Response& res) {
        res.set_content(meta().dump(), "application/json");
    });

    server.Get("/api/view", [this](const httplib::Request& req, httplib::Response& res) {
        const auto parsed = parse_view_request(req.params);
        if (const auto* err = std::get_if<HttpError>(&parsed)) {
            send_error(res, err->status, err->message);
            return;
        }
        const auto image = snapshot();
        try {
            const auto png = render_view_png(*image, std::get<ViewRequest>(parsed));
            res.set_content(std::string(png.begin(), png.end()), "image/png");
        } catch (const Error& e) {
            send_error(res, 500, e.what());
        }
    });

    server.Post("/api/image", [this](const httplib::Request& req, httplib::Response& res) {
        Image image;
        try {
            image = decode_png({reinterpret_cast<const std::uint8_t*>(req.body.data()), req.body.size()});
        } catch (const IoError& e) {
            send_error(res, 400, e.what());
            return;
        }
        try {
            replace_image(std::move(image), "upload");
        } catch (const DimensionError& e) {
            send_error(res, 422, e.what());
            return;
        }
        res.status = 201;
        res.set_content(meta().dump(), "application/json");
    });
}

} // namespace omnivr::service
