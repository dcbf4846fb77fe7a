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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "physinfo/pgm_io.hpp"
#include "test_util.hpp"

using namespace physinfo;
using physinfo::test::TempDir;
using physinfo::test::read_file;
using physinfo::test::write_file;

TEST_CASE("P2 ASCII load") {
    TempDir dir;
    write_file(dir.file("a.pgm"), "P2\n2 2\n255\n0 255 255 0\n");
    const RasterImage img = load_image(dir.file("a.pgm"));
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    CHECK(img.intensities == std::vector<double>{0, 255, 255, 0});
}

TEST_CASE("P5 binary matches P2 with the same payload") {
    TempDir dir;
    write_file(dir.file("a.pgm"), "P2\n2 2\n255\n0 255 255 0\n");
    write_file(dir.file("b.pgm"), std::string("P5\n2 2\n255\n") + '\x00' + '\xff' + '\xff' + '\x00');
    const RasterImage a = load_image(dir.file("a.pgm"));
    const RasterImage b = load_image(dir.file("b.pgm"));
    CHECK(a.intensities == b.intensities);
    CHECK(a.width == b.width);
    CHECK(a.height == b.height);
}

TEST_CASE("header comments are accepted") {
    TempDir dir;
    write_file(dir.file("a.pgm"), "P2\n# a comment\n2 1\n# another\n255\n7 9\n");
    const RasterImage img = load_image(dir.file("a.pgm"));
    CHECK(img.intensities == std::vector<double>{7, 9});
}

TEST_CASE("error categories are distinct") {
    TempDir dir;

    CHECK_THROWS_WITH_AS(load_image(dir.file("missing.pgm")),
                         doctest::Contains("cannot open"), PgmError);
    try {
        load_image(dir.file("missing.pgm"));
    } catch (const PgmError& e) {
        CHECK(e.kind() == PgmError::Kind::missing_file);
    }

    write_file(dir.file("badmagic.pgm"), "Q5\n2 2\n255\n");
    try {
        load_image(dir.file("badmagic.pgm"));
        FAIL("expected error");
    } catch (const PgmError& e) {
        CHECK(e.kind() == PgmError::Kind::malformed_header);
    }

    write_file(dir.file("color.ppm"), "P6\n1 1\n255\nabc");
    try {
        load_image(dir.file("color.ppm"));
        FAIL("expected error");
    } catch (const PgmError& e) {
        CHECK(e.kind() == PgmError::Kind::unsupported_format);
    }

    write_file(dir.file("maxval.pgm"), "P2\n1 1\n65535\n1234\n");
    try {
        load_image(dir.file("maxval.pgm"));
        FAIL("expected error");
    } catch (const PgmError& e) {
        CHECK(e.kind() == PgmError::Kind::unsupported_format);
    }

    write_file(dir.file("trunc.pgm"), "P2\n2 2\n255\n0 255 255\n");
    try {
        load_image(dir.file("trunc.pgm"));
        FAIL("expected error");
    } catch (const PgmError& e) {
        CHECK(e.kind() == PgmError::Kind::truncated_data);
        CHECK(std::string(e.what()).find("unexpected end of data") != std::string::npos);
    }

    write_file(dir.file("trunc5.pgm"), std::string("P5\n2 2\n255\n") + "ab");
    try {
        load_image(dir.file("trunc5.pgm"));
        FAIL("expected error");
    } catch (const PgmError& e) {
        CHECK(e.kind() == PgmError::Kind::truncated_data);
    }
}

TEST_CASE("save rounds half-up and clamps") {
    TempDir dir;
    RasterImage img(2, 1);
    img.at(0, 0) = 25.4;
    img.at(1, 0) = 25.5;
    save_image(img, dir.file("r.pgm"));
    const RasterImage back = load_image(dir.file("r.pgm"));
    CHECK(back.at(0, 0) == 25.0);
    CHECK(back.at(1, 0) == 26.0);
}

TEST_CASE("integer round trip is the identity") {
    TempDir dir;
    RasterImage img(3, 2);
    const double vals[] = {0, 1, 127, 128, 254, 255};
    for (int i = 0; i < 6; ++i) img.intensities[i] = vals[i];
    save_image(img, dir.file("i.pgm"));
    const RasterImage back = load_image(dir.file("i.pgm"));
    CHECK(back.width == img.width);
    CHECK(back.height == img.height);
    CHECK(back.intensities == img.intensities);
}

TEST_CASE("save then load differs by at most 0.5 per pixel") {
    TempDir dir;
    RasterImage img(4, 1);
    img.intensities = {0.49, 100.2, 200.9, 254.5};
    save_image(img, dir.file("q.pgm"));
    const RasterImage back = load_image(dir.file("q.pgm"));
    for (std::size_t i = 0; i < img.intensities.size(); ++i)
        CHECK(std::abs(back.intensities[i] - img.intensities[i]) <= 0.5);
}

TEST_CASE("overlay is deterministic and injective on small label sets") {
    TempDir dir;
    LabelMap m(2, 1, 0);
    m.at(0, 0) = 1;
    m.at(1, 0) = 2;
    save_overlay(m, dir.file("o1.ppm"));
    save_overlay(m, dir.file("o2.ppm"));
    const std::string b1 = read_file(dir.file("o1.ppm"));
    const std::string b2 = read_file(dir.file("o2.ppm"));
    CHECK(b1 == b2);
    CHECK(!b1.empty());

    unsigned char c1[3], c2[3];
    label_color(1, c1);
    label_color(2, c2);
    CHECK((c1[0] != c2[0] || c1[1] != c2[1] || c1[2] != c2[2]));

    // one label -> uniform color
    LabelMap uni(3, 2, 0, 7);
    save_overlay(uni, dir.file("u.ppm"));
    const std::string bytes = read_file(dir.file("u.ppm"));
    const std::size_t payload = bytes.size() - bytes.find("255\n") - 4;
    CHECK(payload == 3 * 3 * 2);
    unsigned char expected[3];
    label_color(7, expected);
    const char* p = bytes.data() + bytes.find("255\n") + 4;
    for (int i = 0; i < 6; ++i) {
        CHECK(static_cast<unsigned char>(p[3 * i + 0]) == expected[0]);
        CHECK(static_cast<unsigned char>(p[3 * i + 1]) == expected[1]);
        CHECK(static_cast<unsigned char>(p[3 * i + 2]) == expected[2]);
    }
}

TEST_CASE("unwritable path reports a write failure") {
    RasterImage img(1, 1, 5.0);
    CHECK_THROWS_AS(save_image(img, "/nonexistent_dir_zz/x.pgm"), PgmError);
    LabelMap m(1, 1, 0, 1);
    CHECK_THROWS_AS(save_overlay(m, "/nonexistent_dir_zz/x.ppm"), PgmError);
}
