#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "quatop/errors.hpp"
#include "quatop/io.hpp"

using namespace quatop;
using io::json;

TEST_CASE("quaternion serialization") {
    const Quaternion q{1.5, -2.0, 0.25, 7.0};
    const json j = io::quaternion_to_json(q);
    CHECK(j.dump() == "[1.5,-2.0,0.25,7.0]");
    CHECK(io::quaternion_from_json(j) == q);

    CHECK_THROWS_AS((void)io::quaternion_from_json(json::array({1, 2, 3})), FormatError);
    CHECK_THROWS_AS((void)io::quaternion_from_json(json::array({1, 2, "x", 4})), FormatError);
    CHECK_THROWS_AS((void)io::quaternion_from_json(json{{"w", 1}}), FormatError);
}

TEST_CASE("qmatrix round-trip is bit identical") {
    auto rng = testing::make_rng(61);
    for (int t = 0; t < 20; ++t) {
        const QMatrix m = testing::rand_qmatrix(rng, 5, 3.0);
        const json j = io::qmatrix_to_json(m);
        const QMatrix back = io::qmatrix_from_json(j);
        REQUIRE(back.dim() == m.dim());
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t s = 0; s < 5; ++s) CHECK(back.at(r, s) == m.at(r, s));
        // parse -> serialize reproduces the document byte for byte
        CHECK(io::qmatrix_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("qmatrix format violations") {
    const json good = io::qmatrix_to_json(QMatrix::identity(2));

    SUBCASE("missing keys") {
        CHECK_THROWS_AS((void)io::qmatrix_from_json(json{{"n", 2}}), FormatError);
        CHECK_THROWS_AS((void)io::qmatrix_from_json(json::array()), FormatError);
    }
    SUBCASE("non-square entry grid") {
        json bad = good;
        bad["entries"].erase(1);  // one row missing
        CHECK_THROWS_AS((void)io::qmatrix_from_json(bad), FormatError);
    }
    SUBCASE("ragged row") {
        json bad = good;
        bad["entries"][1].erase(1);
        CHECK_THROWS_AS((void)io::qmatrix_from_json(bad), FormatError);
    }
    SUBCASE("entry that is not a 4-array") {
        json bad = good;
        bad["entries"][0][0] = json::array({1, 2});
        CHECK_THROWS_AS((void)io::qmatrix_from_json(bad), FormatError);
    }
    SUBCASE("negative n") {
        json bad = good;
        bad["n"] = -2;
        CHECK_THROWS_AS((void)io::qmatrix_from_json(bad), FormatError);
    }
}

TEST_CASE("slice matrix round-trip") {
    SliceMatrix m;
    m.axis = UnitImaginary(0.0, 1.0, 0.0);
    m.a.resize(2, 2);
    m.a << std::complex<double>(1, 2), std::complex<double>(0, 0),
        std::complex<double>(-0.5, 0.25), std::complex<double>(3, -1);
    const json j = io::slice_matrix_to_json(m);
    const SliceMatrix back = io::slice_matrix_from_json(j);
    CHECK(back.axis == m.axis);
    CHECK((back.a - m.a).norm() == 0.0);
    CHECK(io::slice_matrix_to_json(back).dump() == j.dump());

    json bad = j;
    bad["entries"][0][0] = json::array({1.0});
    CHECK_THROWS_AS((void)io::slice_matrix_from_json(bad), FormatError);
    bad = j;
    bad["axis"] = json::array({1.0, 0.0});
    CHECK_THROWS_AS((void)io::slice_matrix_from_json(bad), FormatError);
}

TEST_CASE("spectrum report serialization") {
    SpectrumReport rep;
    rep.spheres.push_back({1.0, 2.0, 3, 1e-12});
    const json j = io::spectrum_to_json(rep);
    CHECK(j["spheres"][0]["alpha"] == 1.0);
    CHECK(j["spheres"][0]["beta"] == 2.0);
    CHECK(j["spheres"][0]["mult"] == 3);
    CHECK(j["normal"] == true);
    CHECK(j["axis"].size() == 3);
}

TEST_CASE("curve round-trips") {
    const Curve seg = Curve::segment(0, 0, 1, 2);
    const Curve arc = Curve::circular_arc(0.5, 0, 1.5, 0.1, 2.0);
    const Curve poly = Curve::polyline({{0, 0}, {1, 0}, {1, 1}});
    for (const Curve& c : {seg, arc, poly}) {
        const json j = io::curve_to_json(c);
        const Curve back = io::curve_from_json(j);
        CHECK(back.kind == c.kind);
        CHECK(back.length() == doctest::Approx(c.length()));
        const auto p = back.point_at(c.length() / 3);
        const auto q = c.point_at(c.length() / 3);
        CHECK(p[0] == doctest::Approx(q[0]));
        CHECK(p[1] == doctest::Approx(q[1]));
        CHECK(io::curve_to_json(back).dump() == j.dump());
    }
    CHECK_THROWS_AS((void)io::curve_from_json(json{{"kind", "spiral"}}), FormatError);
    CHECK_THROWS_AS((void)io::curve_from_json(json{{"radius", 1.0}}), FormatError);
}

TEST_CASE("decomposition round-trip") {
    auto rng = testing::make_rng(62);
    const UnitImaginary m = UnitImaginary::canonical();
    const QMatrix n = testing::rand_normal(rng, 4);
    const Decomposition dec = decompose_op_norm(n, 0.05, m);
    const json j = io::decomposition_to_json(dec);
    CHECK(j["mode"] == "op");
    CHECK(j["epsilon"] == 0.05);
    CHECK(j["norms"].contains("op"));

    const Decomposition back = io::decomposition_from_json(j);
    CHECK(hs_norm(back.u - dec.u) == 0.0);
    CHECK(hs_norm(back.k - dec.k) == 0.0);
    for (std::size_t r = 0; r < 4; ++r) CHECK(back.d[r] == dec.d[r]);
    CHECK(back.levels == dec.levels);
    CHECK(io::decomposition_to_json(back).dump() == j.dump());
    // the deserialized copy still passes the audit
    CHECK(verify(n, back).ok);

    SUBCASE("hs decomposition keeps its curve") {
        std::vector<Quaternion> d;
        for (int r = 0; r < 6; ++r) d.push_back(Quaternion{(r + 1) / 8.0});
        const QMatrix n2 = testing::normal_with_spectrum(rng, d);
        const Curve seg = Curve::segment(0, 0, 1, 0);
        const Decomposition dh = decompose_hs(n2, 1e-2, seg, m);
        const json jh = io::decomposition_to_json(dh);
        CHECK(jh["mode"] == "hs");
        CHECK(jh.contains("curve"));
        const Decomposition backh = io::decomposition_from_json(jh);
        REQUIRE(backh.curve.has_value());
        CHECK(verify(n2, backh).ok);
    }
    SUBCASE("dimension mismatch is rejected") {
        json bad = j;
        bad["d"].erase(0);
        CHECK_THROWS_AS((void)io::decomposition_from_json(bad), FormatError);
    }
    SUBCASE("unknown mode is rejected") {
        json bad = j;
        bad["mode"] = "trace";
        CHECK_THROWS_AS((void)io::decomposition_from_json(bad), FormatError);
    }
}

TEST_CASE("descriptor parsing") {
    SUBCASE("linear with defaults") {
        const OpDescriptor d = io::descriptor_from_json(json{{"diag", {{"kind", "linear"}}}});
        CHECK(d.diag_kind == OpDescriptor::DiagKind::Linear);
        CHECK(d.scale == 1.0);
        CHECK_FALSE(d.band.has_value());
    }
    SUBCASE("values plus band") {
        const json j = {
            {"diag", {{"kind", "values"}, {"values", json::array({json::array({1, 0, 0, 0})})}}},
            {"band", {{"offset", 2}, {"coeff", json::array({0, 0.5, 0, 0})}, {"decay", 1.5}}}};
        const OpDescriptor d = io::descriptor_from_json(j);
        CHECK(d.diag_kind == OpDescriptor::DiagKind::Values);
        REQUIRE(d.band.has_value());
        CHECK(d.band->offset == 2);
        CHECK(d.band->decay == 1.5);
        CHECK(d.band->coeff == Quaternion{0, 0.5, 0, 0});
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS((void)io::descriptor_from_json(json{{"diag", {{"kind", "cubic"}}}}),
                        FormatError);
        CHECK_THROWS_AS((void)io::descriptor_from_json(json::object()), FormatError);
        const json zero_off = {{"diag", {{"kind", "linear"}}},
                               {"band", {{"offset", 0}, {"coeff", json::array({1, 0, 0, 0})}}}};
        CHECK_THROWS_AS((void)io::descriptor_from_json(zero_off), FormatError);
    }
}

TEST_CASE("file loading") {
    const std::string path = "test_io_tmp.json";
    io::save_text(path, io::qmatrix_to_json(QMatrix::identity(3)).dump());
    const QMatrix m = io::load_qmatrix(path);
    CHECK(hs_norm(m - QMatrix::identity(3)) == 0.0);

    io::save_text(path, "{ not json");
    CHECK_THROWS_AS((void)io::load_json(path), FormatError);
    CHECK_THROWS_AS((void)io::load_json("does_not_exist_anywhere.json"), FormatError);
    std::remove(path.c_str());
}
