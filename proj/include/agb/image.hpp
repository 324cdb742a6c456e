#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "agb/tensor.hpp"

namespace agb {

enum class Label { Real = 0, Fake = 1 };

inline int label_index(Label l) { return static_cast<int>(l); }
inline Label opposite(Label l) { return l == Label::Real ? Label::Fake : Label::Real; }
const char* label_name(Label l);
Label label_from_name(const std::string& name);

// Pixel-space rectangle (top/left inclusive origin).
struct Box {
    int top = 0;
    int left = 0;
    int height = 0;
    int width = 0;
    bool contains(int row, int col) const {
        return row >= top && row < top + height && col >= left && col < left + width;
    }
};

// One video frame: RGB pixels as a (3,H,W) tensor in [0,1] plus the known
// face rectangle carried through from synthesis.
struct Frame {
    Tensor pixels;
    Box face_box;
};

struct Clip {
    std::string id;
    Label label = Label::Real;
    std::vector<Frame> frames;
};

// 8-bit RGB PNG IO. Writing quantizes with round(v*255) after clamping.
void write_png(const std::filesystem::path& path, const Tensor& chw);
Tensor read_png(const std::filesystem::path& path);

// Same quantization a PNG write/read round trip applies, in memory.
Tensor quantize8(const Tensor& chw);

}  // namespace agb
