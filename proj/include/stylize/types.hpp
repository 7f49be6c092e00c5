#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stylize {

// ---------------------------------------------------------------------------
// Error taxonomy. Everything user-facing derives from Error so the CLI can
// catch one type and print a clean message.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

class NoObjectError : public Error {
public:
    explicit NoObjectError(const std::string& msg) : Error(msg) {}
};

class BackendError : public Error {
public:
    explicit BackendError(const std::string& msg) : Error(msg) {}
};

class CheckpointError : public Error {
public:
    explicit CheckpointError(const std::string& msg) : Error(msg) {}
};

class IngestionError : public Error {
public:
    explicit IngestionError(const std::string& msg) : Error(msg) {}
};

class TrainingError : public Error {
public:
    explicit TrainingError(const std::string& msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Image: dense H x W x C double tensor, row-major, values nominally in [0,1].
// ---------------------------------------------------------------------------

struct Image {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<double> data;

    Image() = default;
    Image(int h, int w, int c, double fill = 0.0)
        : height(h), width(w), channels(c),
          data(static_cast<size_t>(h) * w * c, fill) {}

    double& at(int y, int x, int c) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    double at(int y, int x, int c) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    bool empty() const { return data.empty(); }
    size_t size() const { return data.size(); }
    bool same_shape(const Image& other) const {
        return height == other.height && width == other.width &&
               channels == other.channels;
    }
};

// Rectangle in source-frame pixel coordinates.
struct CropRect {
    int top = 0;
    int left = 0;
    int height = 0;
    int width = 0;

    bool inside(int frame_height, int frame_width) const {
        return top >= 0 && left >= 0 && height > 0 && width > 0 &&
               top + height <= frame_height && left + width <= frame_width;
    }
    int area() const { return height * width; }
    bool operator==(const CropRect&) const = default;
};

using BoundingBox = CropRect;

struct VideoMeta {
    int num_frames = 0;
    int height = 0;
    int width = 0;
    bool operator==(const VideoMeta&) const = default;
};

// Role of a frame sequence in the pipeline.
enum class FrameRole { Raw, Cropped, Sample, Style };

std::string to_string(FrameRole role);

// Ordered frame sequence with aligned per-frame alpha maps.
struct FrameSet {
    std::vector<Image> frames;      // H x W x 3
    std::vector<Image> alpha_maps;  // H x W x 1
    FrameRole role = FrameRole::Raw;

    int size() const { return static_cast<int>(frames.size()); }
    int height() const { return frames.empty() ? 0 : frames[0].height; }
    int width() const { return frames.empty() ? 0 : frames[0].width; }

    void validate() const;
};

double clamp01(double v);

}  // namespace stylize
