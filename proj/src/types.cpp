#include "stylize/types.hpp"

#include <algorithm>

namespace stylize {

std::string to_string(FrameRole role) {
    switch (role) {
        case FrameRole::Raw: return "Q_Raw";
        case FrameRole::Cropped: return "Q_Cropped";
        case FrameRole::Sample: return "Q_Sample";
        case FrameRole::Style: return "Q_Style";
    }
    return "unknown";
}

void FrameSet::validate() const {
    if (frames.size() != alpha_maps.size()) {
        throw InvalidInputError("FrameSet: " + std::to_string(frames.size()) +
                                " frames but " + std::to_string(alpha_maps.size()) +
                                " alpha maps");
    }
    for (size_t i = 0; i < frames.size(); ++i) {
        const Image& f = frames[i];
        const Image& a = alpha_maps[i];
        if (f.channels != 3) {
            throw InvalidInputError("FrameSet: frame " + std::to_string(i) +
                                    " has " + std::to_string(f.channels) +
                                    " channels, expected 3");
        }
        if (a.channels != 1) {
            throw InvalidInputError("FrameSet: alpha map " + std::to_string(i) +
                                    " has " + std::to_string(a.channels) +
                                    " channels, expected 1");
        }
        if (f.height != frames[0].height || f.width != frames[0].width) {
            throw InvalidInputError("FrameSet: frame " + std::to_string(i) +
                                    " dimensions differ from frame 0");
        }
        if (a.height != f.height || a.width != f.width) {
            throw InvalidInputError("FrameSet: alpha map " + std::to_string(i) +
                                    " dimensions differ from its frame");
        }
    }
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace stylize
