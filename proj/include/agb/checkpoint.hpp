#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "agb/tensor.hpp"

namespace agb {

// Binary weight checkpoint. Layout, all little-endian:
//   magic "AGB1"
//   repeated until EOF:
//     u32   name length
//     bytes UTF-8 tensor name
//     u32   rank
//     u32*  dims
//     f32*  IEEE-754 values, row-major
// Tensors are written in name order so files are byte-stable.
void save_checkpoint(const std::filesystem::path& path,
                     const std::map<std::string, Tensor>& tensors);

std::map<std::string, Tensor> load_checkpoint(const std::filesystem::path& path);

}  // namespace agb
