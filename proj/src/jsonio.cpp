#include "cartanjet/jsonio.hpp"

#include <stdexcept>

namespace cartanjet::io {

using nlohmann::json;

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j)
{
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw std::invalid_argument("jet json: expected a rational as \"p/q\" string or integer");
}

namespace {

json vec_to_json(const std::vector<Rat>& v)
{
    json a = json::array();
    for (const Rat& r : v) a.push_back(rat_to_json(r));
    return a;
}

json mat_to_json(int n, const std::vector<Rat>& m)
{
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(rat_to_json(m[i * n + j]));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class JetT>
json sym2_to_json(const JetT& f)
{
    const int n = f.dim;
    json out = json::array();
    for (int mu = 0; mu < n; ++mu) {
        json plane = json::array();
        for (int a = 0; a < n; ++a) {
            json row = json::array();
            for (int b = 0; b < n; ++b) row.push_back(rat_to_json(f.c2(mu, a, b)));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

json sym3_to_json(const Jet3& f)
{
    const int n = f.dim;
    json out = json::array();
    for (int mu = 0; mu < n; ++mu) {
        json cube = json::array();
        for (int a = 0; a < n; ++a) {
            json plane = json::array();
            for (int b = 0; b < n; ++b) {
                json row = json::array();
                for (int c = 0; c < n; ++c) row.push_back(rat_to_json(f.c3(mu, a, b, c)));
                plane.push_back(std::move(row));
            }
            cube.push_back(std::move(plane));
        }
        out.push_back(std::move(cube));
    }
    return out;
}

int read_dim(const json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument("jet json: missing integer field \"dim\"");
    int n = j["dim"].get<int>();
    if (n < 1 || n > 8) throw std::invalid_argument("jet json: dimension out of range");
    return n;
}

std::vector<Rat> read_vec(const json& j, int n, const char* key)
{
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != static_cast<size_t>(n))
        throw std::invalid_argument(std::string("jet json: field \"") + key +
                                    "\" must be an array of length dim");
    std::vector<Rat> out;
    for (const auto& v : j[key]) out.push_back(rat_from_json(v));
    return out;
}

std::vector<Rat> read_mat(const json& j, int n, const char* key)
{
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != static_cast<size_t>(n))
        throw std::invalid_argument(std::string("jet json: field \"") + key +
                                    "\" must be a dim x dim matrix");
    std::vector<Rat> out(n * n, Rat(0));
    for (int i = 0; i < n; ++i) {
        const auto& row = j[key][i];
        if (!row.is_array() || row.size() != static_cast<size_t>(n))
            throw std::invalid_argument(std::string("jet json: ragged matrix in \"") + key + "\"");
        for (int k = 0; k < n; ++k) out[i * n + k] = rat_from_json(row[k]);
    }
    return out;
}

template <class JetT>
void read_sym2(const json& j, JetT& f, const char* key)
{
    const int n = f.dim;
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != static_cast<size_t>(n))
        throw std::invalid_argument(std::string("jet json: field \"") + key +
                                    "\" must be a dim^3 tensor");
    for (int mu = 0; mu < n; ++mu) {
        const auto& plane = j[key][mu];
        if (!plane.is_array() || plane.size() != static_cast<size_t>(n))
            throw std::invalid_argument("jet json: ragged tensor");
        for (int a = 0; a < n; ++a) {
            const auto& row = plane[a];
            if (!row.is_array() || row.size() != static_cast<size_t>(n))
                throw std::invalid_argument("jet json: ragged tensor");
            for (int b = 0; b < n; ++b) {
                Rat v = rat_from_json(row[b]);
                if (a <= b)
                    f.c2(mu, a, b) = v;
                else if (f.c2(mu, b, a) != v)
                    throw std::invalid_argument("jet json: e2 is not symmetric");
            }
        }
    }
}

void read_sym3(const json& j, Jet3& f, const char* key)
{
    const int n = f.dim;
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != static_cast<size_t>(n))
        throw std::invalid_argument(std::string("jet json: field \"") + key +
                                    "\" must be a dim^4 tensor");
    for (int mu = 0; mu < n; ++mu)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const auto& cell = j[key].at(mu).at(a).at(b).at(c);
                    Rat v = rat_from_json(cell);
                    int s[3] = {a, b, c};
                    std::sort(s, s + 3);
                    if (a == s[0] && b == s[1] && c == s[2])
                        f.c3(mu, a, b, c) = v;
                    else if (f.c3(mu, s[0], s[1], s[2]) != v)
                        throw std::invalid_argument("jet json: e3 is not totally symmetric");
                }
}

} // namespace

json jet_to_json(const Jet2& f)
{
    return json{{"dim", f.dim},
                {"order", 2},
                {"base", vec_to_json(f.base)},
                {"e1", mat_to_json(f.dim, f.e1)},
                {"e2", sym2_to_json(f)}};
}

json jet_to_json(const Jet3& f)
{
    return json{{"dim", f.dim},
                {"order", 3},
                {"base", vec_to_json(f.base)},
                {"e1", mat_to_json(f.dim, f.e1)},
                {"e2", sym2_to_json(f)},
                {"e3", sym3_to_json(f)}};
}

int jet_order(const json& j)
{
    if (!j.is_object() || !j.contains("order") || !j["order"].is_number_integer())
        throw std::invalid_argument("jet json: missing integer field \"order\"");
    int o = j["order"].get<int>();
    if (o != 2 && o != 3) throw std::invalid_argument("jet json: order must be 2 or 3");
    return o;
}

Jet2 jet2_from_json(const json& j)
{
    int n = read_dim(j);
    Jet2 f = jet2_zero_like(n, Rat(0));
    f.base = read_vec(j, n, "base");
    f.e1 = read_mat(j, n, "e1");
    read_sym2(j, f, "e2");
    return f;
}

Jet3 jet3_from_json(const json& j)
{
    int n = read_dim(j);
    Jet3 f = jet3_zero_like(n, Rat(0));
    f.base = read_vec(j, n, "base");
    f.e1 = read_mat(j, n, "e1");
    read_sym2(j, f, "e2");
    read_sym3(j, f, "e3");
    return f;
}

json vecjet_to_json(const VecJet& v)
{
    json x1 = json::array();
    for (int a = 0; a < v.dim; ++a) {
        json plane = json::array();
        for (int b = 0; b < v.dim; ++b) {
            json row = json::array();
            for (int c = 0; c < v.dim; ++c) row.push_back(rat_to_json(v.v1(a, b, c)));
            plane.push_back(std::move(row));
        }
        x1.push_back(std::move(plane));
    }
    return json{{"dim", v.dim},
                {"Xm1", vec_to_json(v.m1)},
                {"X0", mat_to_json(v.dim, v.x0)},
                {"X1", x1}};
}

VecJet vecjet_from_json(const json& j)
{
    int n = read_dim(j);
    VecJet v = vecjet_zero(n);
    v.m1 = read_vec(j, n, "Xm1");
    v.x0 = read_mat(j, n, "X0");
    if (!j.contains("X1")) throw std::invalid_argument("vecjet json: missing \"X1\"");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Rat val = rat_from_json(j["X1"].at(a).at(b).at(c));
                if (b <= c)
                    v.v1(a, b, c) = val;
                else if (v.v1(a, c, b) != val)
                    throw std::invalid_argument("vecjet json: X1 is not symmetric");
            }
    return v;
}

json frame_to_json(const proj::ProjFrame2& f)
{
    return json{{"x", rat_to_json(f.x)}, {"e", rat_to_json(f.e)}, {"e2", rat_to_json(f.e2)}};
}

proj::ProjFrame2 frame_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("x") || !j.contains("e") || !j.contains("e2"))
        throw std::invalid_argument("frame json: expected fields x, e, e2");
    return {rat_from_json(j["x"]), rat_from_json(j["e"]), rat_from_json(j["e2"])};
}

} // namespace cartanjet::io
