#include "fourvertex/io.h"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <boost/multiprecision/gmp.hpp>

namespace fourvertex::io {

namespace {

using boost::multiprecision::mpz_int;

Rational parse_decimal(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
    std::string digits;
    long exponent = 0;
    bool seen_digit = false;
    bool after_point = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (after_point) --exponent;
        } else if (c == '.' && !after_point) {
            after_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) fail(ErrorCode::InvalidInput, "not a number: '" + text + "'");
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(text.substr(pos), &used);
        } catch (const std::exception&) {
            fail(ErrorCode::InvalidInput, "bad exponent in '" + text + "'");
        }
        pos += used;
        exponent += e;
    }
    if (pos != text.size()) fail(ErrorCode::InvalidInput, "trailing characters in '" + text + "'");
    if (exponent > 4000 || exponent < -4000) fail(ErrorCode::InvalidInput, "exponent out of range in '" + text + "'");
    const auto first = digits.find_first_not_of('0');
    mpz_int mantissa(first == std::string::npos ? std::string("0") : digits.substr(first));
    if (negative) mantissa = -mantissa;
    const mpz_int scale = boost::multiprecision::pow(mpz_int(10), static_cast<unsigned>(std::labs(exponent)));
    return exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
}

Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    const Rational num = parse_decimal(text.substr(0, slash));
    const Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::InvalidInput, "zero denominator in '" + text + "'");
    return num / den;
}

const json& vertex_array(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
        fail(ErrorCode::InvalidInput, "polygon JSON needs a \"vertices\" array");
    }
    for (const auto& v : doc["vertices"]) {
        if (!v.is_array() || v.size() != 3) fail(ErrorCode::InvalidInput, "each vertex must be [x, y, z]");
    }
    return doc["vertices"];
}

template <class T, class Parse>
std::vector<Vec3T<T>> read_vertices(const json& doc, Parse parse) {
    std::vector<Vec3T<T>> out;
    for (const auto& v : vertex_array(doc)) out.push_back({parse(v[0]), parse(v[1]), parse(v[2])});
    return out;
}

void require_kind(const json& doc, const std::string& want) {
    const std::string kind = polygon_kind(doc);
    if (kind != want) fail(ErrorCode::InvalidInput, "expected a " + want + " polygon, got " + kind);
}

}  // namespace

double parse_double(const json& value) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
        const auto text = value.get<std::string>();
        const Rational r = text.find('/') != std::string::npos ? parse_fraction(text) : parse_decimal(text);
        return static_cast<double>(r);
    }
    fail(ErrorCode::InvalidInput, "coordinate must be a number or a numeric string");
}

Rational parse_rational(const json& value) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_number()) {
        const double d = value.get<double>();
        if (!std::isfinite(d)) fail(ErrorCode::InvalidInput, "non-finite coordinate");
        return Rational(d);
    }
    if (value.is_string()) {
        const auto text = value.get<std::string>();
        return text.find('/') != std::string::npos ? parse_fraction(text) : parse_decimal(text);
    }
    fail(ErrorCode::InvalidInput, "coordinate must be a number or a numeric string");
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::InvalidInput, "cannot write " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string polygon_kind(const json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
        fail(ErrorCode::InvalidInput, "polygon JSON needs a \"kind\" string");
    }
    const auto kind = doc["kind"].get<std::string>();
    if (kind != "spherical" && kind != "space") fail(ErrorCode::InvalidInput, "unknown polygon kind '" + kind + "'");
    return kind;
}

SphericalPolygon spherical_from_json(const json& doc, const Tolerances& tol) {
    require_kind(doc, "spherical");
    return SphericalPolygon(read_vertices<double>(doc, parse_double), tol);
}

SphericalPolygonQ spherical_exact_from_json(const json& doc, const Tolerances& tol) {
    require_kind(doc, "spherical");
    return SphericalPolygonQ(read_vertices<Rational>(doc, parse_rational), tol);
}

SpacePolygon space_from_json(const json& doc) {
    require_kind(doc, "space");
    return SpacePolygon(read_vertices<double>(doc, parse_double));
}

SpacePolygonQ space_exact_from_json(const json& doc) {
    require_kind(doc, "space");
    return SpacePolygonQ(read_vertices<Rational>(doc, parse_rational));
}

std::string rational_text(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << '/' << denominator(r);
    return out.str();
}

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }
json vec_json(const Vec3Q& v) { return json::array({rational_text(v.x), rational_text(v.y), rational_text(v.z)}); }

namespace {

template <class P>
json polygon_doc(const char* kind, const P& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(vec_json(v));
    return json{{"kind", kind}, {"vertices", verts}};
}

template <class T>
json trace_doc(const ReductionTraceT<T>& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"deleted", s.deleted + 1}, {"before", s.before}, {"after", s.after}, {"delta", s.delta()}});
    }
    json terminal = json::array();
    for (const auto& v : t.terminal) terminal.push_back(vec_json(v));
    return json{{"initial_inflections", t.initial_inflections},
                {"steps", steps},
                {"terminal_ids", indices_json(t.terminal_ids)},
                {"terminal", terminal},
                {"terminal_epsilon", epsilon_json(t.terminal_epsilon)},
                {"terminal_sign_changes", count_sign_changes(t.terminal_epsilon)}};
}

}  // namespace

json to_json(const SphericalPolygon& q) { return polygon_doc("spherical", q); }
json to_json(const SphericalPolygonQ& q) { return polygon_doc("spherical", q); }
json to_json(const SpacePolygon& p) { return polygon_doc("space", p); }
json to_json(const SpacePolygonQ& p) { return polygon_doc("space", p); }

json epsilon_json(const EpsilonSequence& e) {
    json out = json::array();
    for (Sign s : e.signs) out.push_back(std::string(1, sign_char(s)));
    return out;
}

json trace_to_json(const ReductionTrace& t) { return trace_doc(t); }
json trace_to_json(const ReductionTraceQ& t) { return trace_doc(t); }

json triangulation_to_json(const SphericalTriangulation& t) {
    json tris = json::array();
    for (const auto& tri : t.triangles) tris.push_back({tri[0] + 1, tri[1] + 1, tri[2] + 1});
    json chords = json::array();
    for (const auto& [a, b] : t.chords) chords.push_back({a + 1, b + 1});
    return json{{"triangles", tris}, {"region", t.region}, {"chords", chords}};
}

json areas_to_json(const RegionAreas& a) { return json{{"area1", a.area1}, {"area2", a.area2}}; }

json tennis_ball_to_json(const TennisBallReport& r) {
    return json{{"planar", r.planar},
                {"balanced", r.balanced},
                {"areas", areas_to_json(r.areas)},
                {"equal_area", r.equal_area},
                {"equal_area_exact", r.equal_area_exact},
                {"inflections", r.inflections},
                {"theorem_holds", r.theorem_holds}};
}

json mobius_to_json(const MobiusReport& r) {
    json pairs = json::array();
    for (const auto& [a, b] : r.paired) pairs.push_back({a + 1, b + 1});
    return json{{"planar", r.planar},
                {"inflections", r.inflections},
                {"inflection_edges", indices_json(r.inflection_edges)},
                {"paired", pairs},
                {"pairing_holds", r.pairing_holds},
                {"directions_opposite", r.directions_opposite},
                {"theorem_holds", r.theorem_holds}};
}

std::vector<std::vector<Vec3>> arc_polylines(const SphericalPolygon& q, int samples) {
    std::vector<std::vector<Vec3>> out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        const Vec3& a = q[k];
        const Vec3& b = q[k + 1];
        const double omega = angle_between(a, b);
        std::vector<Vec3> line;
        for (int s = 0; s < samples; ++s) {
            const double t = samples > 1 ? static_cast<double>(s) / (samples - 1) : 0.0;
            const double wa = std::sin((1 - t) * omega) / std::sin(omega);
            const double wb = std::sin(t * omega) / std::sin(omega);
            line.push_back(normalized(a * wa + b * wb));
        }
        out.push_back(std::move(line));
    }
    return out;
}

json plot_json(const SphericalPolygon& q, int samples) {
    json out = json::array();
    for (const auto& line : arc_polylines(q, samples)) {
        json pts = json::array();
        for (const auto& p : line) pts.push_back(vec_json(p));
        out.push_back(pts);
    }
    return out;
}

json indices_json(const std::vector<std::size_t>& zero_based) {
    json out = json::array();
    for (std::size_t i : zero_based) out.push_back(i + 1);
    return out;
}

}  // namespace fourvertex::io

namespace fourvertex {

std::string polygon_json(const SphericalPolygon& q) { return io::to_json(q).dump(); }
std::string polygon_json(const SphericalPolygonQ& q) { return io::to_json(q).dump(); }
std::string polygon_json(const SpacePolygon& p) { return io::to_json(p).dump(); }
std::string polygon_json(const SpacePolygonQ& p) { return io::to_json(p).dump(); }

}  // namespace fourvertex
