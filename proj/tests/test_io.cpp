#include "doctest.h"

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "foamfit/datasets.hpp"
#include "foamfit/io.hpp"
#include "foamfit/training.hpp"

using namespace foamfit;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("foamfit_io_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("format_double round-trips doubles through text") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.5) == "1.5");
    CHECK(format_double(-42.0) == "-42");
    std::mt19937_64 rng(5);
    for (int k = 0; k < 2000; ++k) {
        const double scale = std::pow(10.0, static_cast<int>(rng() % 13) - 6);
        const double v = ((rng() >> 11) * 0x1.0p-53 - 0.5) * scale;
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
    // a value %.15g cannot represent exactly
    const double awkward = 0.1 + 0.2;
    CHECK(std::stod(format_double(awkward)) == awkward);
}

TEST_CASE("curve csv round-trips with and without uncertainties") {
    Curve c;
    c.x = {1.0, 1.025, 1.05};
    c.y = {0.0, 13.71, 29.76};

    SUBCASE("two columns") {
        const std::string text = curve_to_csv(c);
        CHECK(text.substr(0, 4) == "x,y\n");
        CHECK(parse_curve_csv(text) == c);
    }
    SUBCASE("three columns") {
        c.y_std = {0.01, 0.42, 0.9};
        const std::string text = curve_to_csv(c);
        CHECK(text.substr(0, 10) == "x,y,y_std\n");
        CHECK(parse_curve_csv(text) == c);
    }
    SUBCASE("whitespace and blank lines are tolerated") {
        const Curve p = parse_curve_csv("x,y\n 1.0 , 2.5 \n\n1.5,3.0\n");
        CHECK(p.x == std::vector<double>{1.0, 1.5});
        CHECK(p.y == std::vector<double>{2.5, 3.0});
    }
}

TEST_CASE("curve csv rejects malformed input") {
    CHECK_THROWS_AS(parse_curve_csv(""), DomainError);
    CHECK_THROWS_AS(parse_curve_csv("a,b\n1,2\n"), DomainError);
    CHECK_THROWS_AS(parse_curve_csv("x,y\n1,2,3\n"), DomainError);
    CHECK_THROWS_AS(parse_curve_csv("x,y\n1\n"), DomainError);
    CHECK_THROWS_AS(parse_curve_csv("x,y\n1,oops\n"), DomainError);
    CHECK_THROWS_AS(parse_curve_csv("x,y,y_std,extra\n1,2,3,4\n"), DomainError);
}

TEST_CASE("raw recordings parse against a fixed geometry") {
    RawGeometry geom;
    geom.area = 50.0;
    geom.length = 20.0;
    const RawRecording rec =
        parse_raw_csv("t,signal,displacement\n0,0,0\n0.5,1.0,3.0\n1,2.0,6.0\n",
                      Mode::Tension, geom);
    CHECK(rec.mode == Mode::Tension);
    CHECK(rec.time == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(rec.signal == std::vector<double>{0.0, 1.0, 2.0});
    CHECK(rec.displacement == std::vector<double>{0.0, 3.0, 6.0});
    CHECK(rec.geometry.area == 50.0);
    CHECK_THROWS_AS(parse_raw_csv("t,signal\n0,0\n", Mode::Tension, geom), DomainError);
}

TEST_CASE("geometry files accept comments and reject unknown keys") {
    const RawGeometry g = parse_geometry("# midsole specimen\nA = 50\nL=20\n\nH = 25\nR=10\n");
    CHECK(g.area == 50.0);
    CHECK(g.length == 20.0);
    CHECK(g.height == 25.0);
    CHECK(g.radius == 10.0);
    CHECK_THROWS_AS(parse_geometry("Q = 3\n"), DomainError);
    CHECK_THROWS_AS(parse_geometry("A 50\n"), DomainError);
    CHECK_THROWS_AS(parse_geometry("A = fifty\n"), DomainError);
}

TEST_CASE("dataset manifests round-trip through a directory") {
    TempDir tmp;
    const FoamDataset d = builtin_dataset("leap");
    save_dataset(d, tmp.path);
    const FoamDataset back = load_dataset_manifest(tmp.path / "dataset.json");
    CHECK(back.label == d.label);
    CHECK(back.shear_prestretch == d.shear_prestretch);
    CHECK(back.tension == d.tension);
    CHECK(back.compression == d.compression);
    CHECK(back.shear == d.shear);
}

TEST_CASE("manifest loading reports missing pieces") {
    TempDir tmp;
    CHECK_THROWS_AS(load_dataset_manifest(tmp.path / "absent.json"), DomainError);

    write_text_file(tmp.path / "broken.json", "{ not json");
    CHECK_THROWS_AS(load_dataset_manifest(tmp.path / "broken.json"), DomainError);

    write_text_file(tmp.path / "partial.json",
                    "{\"label\": \"x\", \"tension\": \"tension.csv\"}");
    write_text_file(tmp.path / "tension.csv", "x,y\n1,0\n");
    CHECK_THROWS_AS(load_dataset_manifest(tmp.path / "partial.json"), DomainError);
}

TEST_CASE("manifest defaults fill label and pre-stretch") {
    TempDir tmp;
    write_text_file(tmp.path / "tension.csv", "x,y\n1,0\n1.1,5\n");
    write_text_file(tmp.path / "compression.csv", "x,y\n1,0\n0.9,-5\n");
    write_text_file(tmp.path / "shear.csv", "x,y\n0,0\n0.1,2\n");
    write_text_file(tmp.path / "pebax.json",
                    "{\"tension\": \"tension.csv\", \"compression\": \"compression.csv\", "
                    "\"shear\": \"shear.csv\"}");
    const FoamDataset d = load_dataset_manifest(tmp.path / "pebax.json");
    CHECK(d.label == "pebax");
    CHECK(d.shear_prestretch == 1.0);
}

TEST_CASE("text files write and read back through created directories") {
    TempDir tmp;
    const auto nested = tmp.path / "a" / "b" / "out.txt";
    write_text_file(nested, "payload\n");
    CHECK(read_text_file(nested) == "payload\n");
    CHECK_THROWS_AS(read_text_file(tmp.path / "missing.txt"), DomainError);
}

TEST_CASE("trace csv carries one labeled row per epoch") {
    std::vector<TraceRow> trace;
    TraceRow r1;
    r1.epoch = 1;
    r1.parts = {0.5, 0.25, 0.125, 0.0625, 0.03125, 0.96875};
    trace.push_back(r1);
    TraceRow r2 = r1;
    r2.epoch = 2;
    r2.parts.total = 0.5;
    trace.push_back(r2);

    const std::string text = trace_to_csv(trace);
    CHECK(text == "epoch,total,tension,compression,shear,p22,reg\n"
                  "1,0.96875,0.5,0.25,0.125,0.0625,0.03125\n"
                  "2,0.5,0.5,0.25,0.125,0.0625,0.03125\n");
}

TEST_CASE("prediction and contribution tables scan the dataset grids") {
    const FoamDataset d = builtin_dataset("leap");
    const ModelSpec m = printed_model("leap", Architecture::SI_MI);

    const std::string pred = predictions_csv(m, d);
    CHECK(pred.find("mode,x,observed,predicted,residual\n") == 0);
    // 39 data rows plus header plus trailing newline
    CHECK(std::count(pred.begin(), pred.end(), '\n') == 40);
    CHECK(pred.find("tension,1.3,298.59,") != std::string::npos);
    CHECK(pred.find("compression,") != std::string::npos);
    CHECK(pred.find("shear,0.15,") != std::string::npos);

    ModelSpec sparse = m;
    sparse.terms[1].w = 0.0;  // silenced terms must not appear
    const std::string contrib = contributions_csv(sparse, d);
    CHECK(contrib.find("mode,x,term,stress_kpa\n") == 0);
    CHECK(std::count(contrib.begin(), contrib.end(), '\n') == 1 + 39 * 2);
    CHECK(contrib.find(",9,") == std::string::npos);
    CHECK(contrib.find("tension,1.3,11,") != std::string::npos);
}
