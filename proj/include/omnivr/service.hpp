#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "omnivr/image.hpp"
#include "omnivr/projection.hpp"
#include "omnivr/resample.hpp"

namespace httplib {
class Server;
}

namespace omnivr::service {

inline constexpr std::size_t kMaxViewPixels = 4096ull * 4096ull;

struct ViewRequest {
    PerspectiveCamera camera;
    double zoom = 1.0;
    Interpolator interp = Interpolator::slerp;
};

struct HttpError {
    int status = 400;
    std::string message;
};

/// Query parameters yaw, pitch, fov (radians), zoom, w, h, interp; missing
/// ones take their defaults (0, 0, pi/2, 1, 512, 512, slerp). Malformed values
/// give 400, rasters above 4096^2 pixels 413, zoom <= 0 422.
std::variant<ViewRequest, HttpError> parse_view_request(const std::multimap<std::string, std::string>& params);

/// PNG bytes of the zoomed perspective view; shared by the CLI and the service.
std::vector<std::uint8_t> render_view_png(const Image& img, const ViewRequest& req);

// HTTP front end over one immutable panorama. Requests take a snapshot of
// the current image; POST /api/image swaps in a new one atomically.
class ViewService {
public:
    ViewService(Image image, std::string name);

    nlohmann::json meta() const;

    /// GET /api/meta, GET /api/view, POST /api/image.
    void mount(httplib::Server& server);

    void replace_image(Image image, std::string name);

private:
    std::shared_ptr<const Image> snapshot() const;

    mutable std::mutex mutex_;
    std::shared_ptr<const Image> image_;
    std::string name_;
};

} // namespace omnivr::service
