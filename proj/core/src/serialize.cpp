#include "sumrank/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sumrank {

namespace {

using nlohmann::json;

json elem_to_json(const FieldContext& ctx, Elem x) { return json(ctx.coeffs(x)); }

Elem elem_from_json(const FieldContext& ctx, const json& j) {
    std::vector<std::uint32_t> c = j.get<std::vector<std::uint32_t>>();
    return ctx.from_coeffs(c);
}

json field_to_obj(const FieldContext& ctx) {
    json j;
    j["p"] = ctx.characteristic();
    j["L"] = ctx.degree();
    j["modulus"] = ctx.modulus();
    j["primitive"] = ctx.coeffs(ctx.primitive());
    return j;
}

std::shared_ptr<const FieldContext> field_from_obj(const json& j) {
    auto p = j.at("p").get<std::uint64_t>();
    auto L = j.at("L").get<unsigned>();
    auto modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    auto prim_coeffs = j.at("primitive").get<std::vector<std::uint32_t>>();
    if (prim_coeffs.size() != L) throw std::invalid_argument("primitive coefficient count");
    Elem prim = 0;
    for (std::size_t i = prim_coeffs.size(); i-- > 0;) {
        if (prim_coeffs[i] >= p) throw std::invalid_argument("primitive coefficient out of range");
        prim = prim * p + prim_coeffs[i];
    }
    return FieldContext::from_parts(p, L, std::move(modulus), prim);
}

json matrix_to_obj(const Matrix& m) {
    json j;
    j["level"] = m.level().degree;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t jj = 0; jj < m.cols(); ++jj)
            entries.push_back(elem_to_json(m.ctx(), m.at(i, jj)));
    j["entries"] = entries;
    return j;
}

Matrix matrix_from_obj(const FieldContext& ctx, const json& j) {
    FieldLevel level = ctx.level(j.at("level").get<unsigned>());
    auto rows = j.at("rows").get<std::size_t>();
    auto cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
    Matrix m(level, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t jj = 0; jj < cols; ++jj) {
            Elem v = elem_from_json(ctx, entries[i * cols + jj]);
            if (!level.contains(v)) throw std::invalid_argument("matrix entry outside its level");
            m.set(i, jj, v);
        }
    return m;
}

json seed_to_obj(const SeedCode& seed) {
    json j;
    j["kind"] = seed_kind_name(seed.kind);
    j["q"] = seed.q;
    j["r"] = seed.r;
    j["mu"] = seed.mu;
    j["rho"] = seed.rho;
    j["guaranteed_distance"] = seed.guaranteed_distance;
    j["H"] = matrix_to_obj(seed.H);
    return j;
}

SeedCode seed_from_obj(const FieldContext& ctx, const json& j) {
    SeedCode s{seed_kind_from_name(j.at("kind").get<std::string>()),
               j.at("q").get<std::uint64_t>(),
               j.at("r").get<std::size_t>(),
               j.at("mu").get<std::size_t>(),
               j.at("rho").get<std::size_t>(),
               j.at("guaranteed_distance").get<std::size_t>(),
               matrix_from_obj(ctx, j.at("H"))};
    if (s.H.rows() != s.rho || s.H.cols() != s.mu)
        throw std::invalid_argument("seed parity check has wrong shape");
    return s;
}

json params_to_obj(const MsrdParams& p) {
    json j;
    j["q"] = p.q;
    j["r"] = p.r;
    j["m"] = p.m;
    j["l"] = p.ell;
    j["mu"] = p.mu;
    j["g"] = p.g;
    j["N"] = p.N;
    j["h"] = p.h;
    j["k"] = p.k;
    return j;
}

MsrdParams params_from_obj(const json& j) {
    MsrdParams p;
    p.q = j.at("q").get<std::uint64_t>();
    p.r = j.at("r").get<std::size_t>();
    p.m = j.at("m").get<std::size_t>();
    p.ell = j.at("l").get<std::size_t>();
    p.mu = j.at("mu").get<std::size_t>();
    p.g = j.at("g").get<std::size_t>();
    p.N = j.at("N").get<std::size_t>();
    p.h = j.at("h").get<std::size_t>();
    p.k = j.at("k").get<std::size_t>();
    p.t = std::min(p.h, p.mu);
    p.validate();
    return p;
}

json msrd_to_obj(const MsrdCode& code) {
    const FieldContext& ctx = *code.ctx;
    json j;
    j["params"] = params_to_obj(code.params);
    j["field"] = field_to_obj(ctx);
    json a = json::array();
    for (Elem x : code.a) a.push_back(elem_to_json(ctx, x));
    j["a"] = a;
    json beta = json::array();
    for (Elem x : code.beta) beta.push_back(elem_to_json(ctx, x));
    j["beta"] = beta;
    json alpha = json::array();
    for (Elem x : code.alpha_vec) alpha.push_back(elem_to_json(ctx, x));
    j["alpha"] = alpha;
    j["parity_check"] = matrix_to_obj(code.parity_check);
    j["provenance"] = seed_to_obj(code.provenance);
    return j;
}

MsrdCode msrd_from_obj(const json& j) {
    auto ctx = field_from_obj(j.at("field"));
    MsrdCode code;
    code.ctx = ctx;
    code.params = params_from_obj(j.at("params"));
    for (const auto& e : j.at("a")) code.a.push_back(elem_from_json(*ctx, e));
    for (const auto& e : j.at("beta")) code.beta.push_back(elem_from_json(*ctx, e));
    for (const auto& e : j.at("alpha")) code.alpha_vec.push_back(elem_from_json(*ctx, e));
    code.parity_check = matrix_from_obj(*ctx, j.at("parity_check"));
    code.provenance = seed_from_obj(*ctx, j.at("provenance"));
    if (code.a.size() != code.params.ell) throw std::invalid_argument("representative count");
    if (code.beta.size() != code.params.mu * code.params.r)
        throw std::invalid_argument("beta length mismatch");
    if (code.parity_check.rows() != code.params.h || code.parity_check.cols() != code.params.N)
        throw std::invalid_argument("parity check has wrong shape");
    return code;
}

json pmds_to_obj(const PmdsCode& code) {
    json j;
    j["outer"] = msrd_to_obj(code.outer);
    j["nu"] = code.nu;
    j["delta_loc"] = code.delta_loc;
    json gens = json::array();
    for (const auto& a : code.local_gens) gens.push_back(matrix_to_obj(a));
    j["local_gens"] = gens;
    j["global_gen"] = matrix_to_obj(code.global_gen);
    return j;
}

PmdsCode pmds_from_obj(const json& j) {
    PmdsCode code;
    code.outer = msrd_from_obj(j.at("outer"));
    code.nu = j.at("nu").get<std::size_t>();
    code.delta_loc = j.at("delta_loc").get<std::size_t>();
    for (const auto& g : j.at("local_gens"))
        code.local_gens.push_back(matrix_from_obj(*code.outer.ctx, g));
    code.global_gen = matrix_from_obj(*code.outer.ctx, j.at("global_gen"));
    if (code.nu != code.outer.params.r + code.delta_loc - 1)
        throw std::invalid_argument("nu, delta_loc inconsistent");
    if (code.local_gens.size() != code.outer.params.g)
        throw std::invalid_argument("local generator count mismatch");
    return code;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const FieldContext& ctx) { return dump(field_to_obj(ctx)); }

std::shared_ptr<const FieldContext> field_from_json(const std::string& text) {
    return field_from_obj(json::parse(text));
}

std::string to_json(const Matrix& m) { return dump(matrix_to_obj(m)); }

Matrix matrix_from_json(const FieldContext& ctx, const std::string& text) {
    return matrix_from_obj(ctx, json::parse(text));
}

std::string to_json(const SeedCode& seed) { return dump(seed_to_obj(seed)); }

SeedCode seed_from_json(const FieldContext& ctx, const std::string& text) {
    return seed_from_obj(ctx, json::parse(text));
}

std::string to_json(const MsrdCode& code) { return dump(msrd_to_obj(code)); }

MsrdCode msrd_from_json(const std::string& text) { return msrd_from_obj(json::parse(text)); }

std::string to_json(const PmdsCode& code) { return dump(pmds_to_obj(code)); }

PmdsCode pmds_from_json(const std::string& text) { return pmds_from_obj(json::parse(text)); }

bool json_is_pmds(const std::string& text) {
    json j = json::parse(text);
    return j.contains("global_gen");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace sumrank
