#include "bzkit/io.hpp"

#include <algorithm>
#include <sstream>

namespace bzkit {

namespace {

int require_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ValidationError(std::string("missing or non-integer field '") + field + "'");
    return j[field].get<int>();
}

} // namespace

json to_json(const WeightVector& w) {
    json coeffs = json::object();
    for (auto [i, c] : w.coeffs()) coeffs[std::to_string(i)] = c;
    if (w.kind() == RootKind::Finite)
        return json{{"kind", "finite"},
                    {"lo", w.interval().lo},
                    {"hi", w.interval().hi},
                    {"coeffs", coeffs}};
    return json{{"kind", "affine"}, {"l", w.l()}, {"coeffs", coeffs}};
}

WeightVector weight_from_json(const json& j) {
    std::string kind = j.value("kind", "");
    WeightVector w = (kind == "finite")
                         ? WeightVector::finite(Interval(require_int(j, "lo"), require_int(j, "hi")))
                         : (kind == "affine")
                             ? WeightVector::affine(require_int(j, "l"))
                             : throw ValidationError("WeightVector: kind must be finite or affine");
    if (j.contains("coeffs")) {
        for (auto& [key, val] : j["coeffs"].items()) w.set(std::stoi(key), val.get<int>());
    }
    return w;
}

json to_json(const MayaFinite& k) {
    return json{{"lo", k.interval.lo}, {"hi", k.interval.hi}, {"members", k.members}};
}

MayaFinite maya_finite_from_json(const json& j) {
    Interval I(require_int(j, "lo"), require_int(j, "hi"));
    if (!j.contains("members") || !j["members"].is_array())
        throw ValidationError("MayaFinite: missing members array");
    return MayaFinite(I, j["members"].get<std::vector<int>>());
}

json to_json(const MayaCharged& k) {
    return json{{"charge", k.charge},
                {"shape", k.shape.parts},
                {"side", k.side == Side::Particle ? "particle" : "hole"}};
}

MayaCharged maya_charged_from_json(const json& j) {
    int r = require_int(j, "charge");
    std::vector<int> parts;
    if (j.contains("shape")) parts = j["shape"].get<std::vector<int>>();
    std::string side = j.value("side", "particle");
    if (side != "particle" && side != "hole")
        throw ValidationError("MayaCharged: side must be particle or hole");
    return MayaCharged(r, Partition(std::move(parts)),
                       side == "particle" ? Side::Particle : Side::Hole);
}

json to_json(const LusztigFinite& a) {
    json entries = json::array();
    for (int i = a.interval().lo; i <= a.interval().hi; ++i)
        for (int j = i + 1; j <= a.interval().ext_hi(); ++j)
            if (int v = a.at(i, j); v != 0)
                entries.push_back(json{{"i", i}, {"j", j}, {"a", v}});
    return json{{"lo", a.interval().lo}, {"hi", a.interval().hi}, {"entries", entries}};
}

LusztigFinite lusztig_finite_from_json(const json& j) {
    Interval I(require_int(j, "lo"), require_int(j, "hi"));
    LusztigFinite a(I);
    if (j.contains("entries")) {
        for (const auto& e : j["entries"])
            a.set(require_int(e, "i"), require_int(e, "j"), require_int(e, "a"));
    }
    return a;
}

json to_json(const LusztigAffine& a) {
    json entries = json::array();
    for (int r = 0; r < a.l(); ++r)
        for (int d = 1; d < a.width(); ++d)
            if (int v = a.at_class(r, d); v != 0)
                entries.push_back(json{{"res", r}, {"len", d}, {"mult", v}});
    return json{{"l", a.l()}, {"entries", entries}};
}

LusztigAffine lusztig_affine_from_json(const json& j) {
    LusztigAffine a(require_int(j, "l"));
    if (j.contains("entries")) {
        for (const auto& e : j["entries"])
            a.set_class(require_int(e, "res"), require_int(e, "len"), require_int(e, "mult"));
    }
    a.minimize_width();
    return a;
}

json to_json(const BZFinite& M) {
    json comps = json::array();
    for (uint32_t mask = 1; mask < M.full_mask(); ++mask) {
        MayaFinite k = M.maya_of(mask);
        comps.push_back(json{{"k", k.members}, {"M", M.comp(mask)}});
    }
    return json{{"lo", M.interval().lo}, {"hi", M.interval().hi}, {"components", comps}};
}

BZFinite bz_finite_from_json(const json& j) {
    Interval I(require_int(j, "lo"), require_int(j, "hi"));
    BZFinite M(I);
    if (!j.contains("components") || !j["components"].is_array())
        throw ValidationError("BZFinite: missing components array");
    std::vector<bool> seen(size_t(1) << M.ext_size(), false);
    for (const auto& c : j["components"]) {
        if (!c.contains("k") || !c.contains("M"))
            throw ValidationError("BZFinite: each component needs fields k and M");
        MayaFinite k(I, c["k"].get<std::vector<int>>());
        uint32_t mask = M.mask_of(k);
        if (seen[mask]) throw ValidationError("BZFinite: duplicate component " + k.str());
        seen[mask] = true;
        M.set_comp(mask, c["M"].get<long long>());
    }
    for (uint32_t mask = 1; mask < M.full_mask(); ++mask)
        if (!seen[mask])
            throw ValidationError("BZFinite: component missing for " + M.maya_of(mask).str());
    return M;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        std::erase_if(cur, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (cur.empty()) continue;
        parts.push_back(std::stoi(cur));
    }
    return Partition(std::move(parts));
}

MayaFinite parse_maya_finite(const std::string& text) {
    // "I=1..2;{1,3}"
    auto semi = text.find(';');
    if (text.rfind("I=", 0) != 0 || semi == std::string::npos)
        throw ValidationError("expected text of the form I=lo..hi;{a,b,...}");
    std::string range = text.substr(2, semi - 2);
    auto dots = range.find("..");
    if (dots == std::string::npos) throw ValidationError("expected lo..hi range");
    Interval I(std::stoi(range.substr(0, dots)), std::stoi(range.substr(dots + 2)));
    std::string set = text.substr(semi + 1);
    if (set.size() < 2 || set.front() != '{' || set.back() != '}')
        throw ValidationError("expected member set {a,b,...}");
    std::vector<int> members;
    std::istringstream is(set.substr(1, set.size() - 2));
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) members.push_back(std::stoi(tok));
    return MayaFinite(I, std::move(members));
}

MayaCharged parse_maya_charged(const std::string& text) {
    // "r=1;lambda=2,1" with optional ";hole"
    if (text.rfind("r=", 0) != 0) throw ValidationError("expected text of the form r=..;lambda=..");
    auto semi = text.find(';');
    if (semi == std::string::npos) throw ValidationError("missing lambda part");
    int charge = std::stoi(text.substr(2, semi - 2));
    std::string rest = text.substr(semi + 1);
    if (rest.rfind("lambda=", 0) != 0) throw ValidationError("missing lambda part");
    rest = rest.substr(7);
    Side side = Side::Particle;
    auto semi2 = rest.find(';');
    if (semi2 != std::string::npos) {
        std::string tag = rest.substr(semi2 + 1);
        if (tag == "hole") side = Side::Hole;
        else if (tag != "particle") throw ValidationError("unknown side tag " + tag);
        rest = rest.substr(0, semi2);
    }
    return MayaCharged(charge, parse_partition(rest), side);
}

} // namespace bzkit
