// Copyright 2026 The physinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

#include "physinfo/label_map.hpp"
#include "physinfo/raster_image.hpp"

namespace physinfo {

// I/O failures carry a category so callers can report them distinctly.
class PgmError : public std::runtime_error {
public:
    enum class Kind {
        missing_file,       // path does not exist / cannot be opened for read
        malformed_header,   // magic/width/height/maxval not parseable
        unsupported_format, // not P2/P5 grayscale or maxval != 255
        truncated_data,     // pixel stream ends early
        write_failure,      // cannot open or write the output path
    };

    PgmError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Reads an 8-bit grayscale PGM (P2 ASCII or P5 binary, maxval 255).
// '#' comment lines in the header are accepted.
RasterImage load_image(const std::string& path);

// Writes a P5 PGM. Intensities are rounded half-up and clamped to [0, 255].
void save_image(const RasterImage& img, const std::string& path);

// Writes a P6 PPM with one deterministic color per label, derived from a
// fixed hash of the label id. Identical maps yield byte-identical files.
void save_overlay(const LabelMap& labels, const std::string& path);

// The fixed label -> RGB palette used by save_overlay.
void label_color(RegionId id, unsigned char rgb[3]);

}  // namespace physinfo
