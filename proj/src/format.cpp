#include "tfd/format.hpp"

#include <sstream>

#include "json.hpp"
#include "tfd/errors.hpp"

namespace tfd {

using nlohmann::ordered_json;

namespace {

const char* kind_name(BaseKind k) {
    switch (k) {
        case BaseKind::P2: return "P2";
        case BaseKind::S2xS2: return "S2xS2";
        case BaseKind::Hirzebruch: return "Hirzebruch";
    }
    return "?";
}

ordered_json class_json(const SurfaceModel& m, const CohClass& c) {
    return {{"text", format_class(m, c)}, {"coeffs", c.coeffs}};
}

ordered_json record_json(const TFDRecord& r) {
    const SurfaceModel& m0 = r.model0;
    SurfaceModel ext = make_model(extremal_kind(r.b_min));
    ordered_json basis = ordered_json::array();
    for (const auto& b : m0.basis) basis.push_back(b.str());
    ordered_json fixed = ordered_json::array();
    for (const auto& f : r.fixed) {
        ordered_json j{{"level", f.level}, {"shape", shape_name(f.shape)}, {"genus", f.genus}, {"area", f.area}};
        j["pd_class"] = f.pd_class ? class_json(m0, *f.pd_class) : ordered_json(nullptr);
        j["normal_chern"] = f.normal_chern ? ordered_json{f.normal_chern->first, f.normal_chern->second}
                                           : ordered_json(nullptr);
        fixed.push_back(j);
    }
    ordered_json cycles = ordered_json::array();
    for (const auto& c : r.cycles) cycles.push_back(class_json(m0, c));
    ordered_json slices = ordered_json::array();
    for (const auto& s : r.slices)
        slices.push_back({{"lo", s.lo}, {"hi", s.hi}, {"model", s.model}, {"omega_lo", s.omega_lo}, {"euler", s.euler}});
    return {
        {"case_id", r.case_id},
        {"group", r.group},
        {"annotation", r.annotation},
        {"profile",
         {{"interior_levels", std::vector<int>(r.profile.interior_levels.begin(), r.profile.interior_levels.end())},
          {"m", r.profile.m},
          {"z0_components", r.profile.z0_components}}},
        {"model0", {{"kind", kind_name(m0.base)}, {"blowups", m0.blowups}, {"name", m0.name()}, {"basis", basis}}},
        {"omega0", class_json(m0, r.omega0)},
        {"euler_minus2_plus", class_json(ext, r.euler_minus2_plus)},
        {"fixed", fixed},
        {"cycles", cycles},
        {"b_min", r.b_min},
        {"b_max", r.b_max},
        {"b2", r.b2},
        {"c1_cubed", r.c1_cubed},
        {"slices", slices},
    };
}

}  // namespace

std::string to_json(const std::vector<TFDRecord>& records, int indent) {
    ordered_json doc{{"schema", kSchemaVersion}, {"count", records.size()}, {"records", ordered_json::array()}};
    for (const auto& r : records) doc["records"].push_back(record_json(r));
    return doc.dump(indent) + "\n";
}

std::vector<TFDRecord> from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw TfdError("parse", e.what());
    }
    if (doc.value("schema", "") != kSchemaVersion)
        throw TfdError("parse", "unsupported schema '" + doc.value("schema", "") + "'");
    std::vector<TFDRecord> out;
    for (const auto& j : doc.at("records")) {
        CriticalProfile p;
        for (int l : j.at("profile").at("interior_levels")) p.interior_levels.insert(l);
        p.m = j.at("profile").at("m");
        p.z0_components = j.at("profile").at("z0_components");
        int b_min = j.at("b_min");
        std::vector<SplitPart> z0;
        for (const auto& f : j.at("fixed"))
            if (f.at("level") == 0) z0.push_back({CohClass(f.at("pd_class").at("coeffs").get<std::vector<i64>>()), 0, 0});
        std::vector<CohClass> cycles;
        for (const auto& c : j.at("cycles")) cycles.push_back(CohClass(c.at("coeffs").get<std::vector<i64>>()));
        TFDRecord r = build_record(b_min, p, z0, cycles);
        r.case_id = j.at("case_id");
        r.group = j.at("group");
        r.annotation = j.at("annotation");
        if (record_json(r) != j) throw TfdError("parse", "record " + r.case_id + " does not match its rebuild");
        out.push_back(std::move(r));
    }
    if (doc.at("count") != out.size()) throw TfdError("parse", "record count mismatch");
    return out;
}

std::string level_cell(const TFDRecord& r, int level) {
    std::vector<std::string> parts;
    int points = 0;
    for (const auto& f : r.fixed) {
        if (f.level != level) continue;
        if (f.shape == Shape::Point) {
            ++points;
        } else if (f.pd_class) {
            parts.push_back(std::string(f.shape == Shape::Sphere ? "S^2" : "T^2") +
                            " PD=" + format_class(r.model0, *f.pd_class) + " area " + std::to_string(f.area));
        } else {
            parts.push_back("S^2 area " + std::to_string(f.area));
        }
    }
    if (points == 1) return "pt";
    if (points > 1) return std::to_string(points) + " pts";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "; " : "") + parts[i];
    return s;
}

std::string to_markdown(const std::vector<TFDRecord>& records) {
    std::ostringstream o;
    o << "| case | (M_0, [omega_0]) | e(P_{-2+eps}) | Z_{-2} | Z_{-1} | Z_0 | Z_1 | Z_2 | b_2 | c_1^3 |\n";
    o << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : records) {
        SurfaceModel ext = make_model(extremal_kind(r.b_min));
        o << "| " << r.case_id << " | (" << r.model0.name() << ", " << format_class(r.model0, r.omega0) << ") | "
          << format_class(ext, r.euler_minus2_plus);
        for (int l = -2; l <= 2; ++l) o << " | " << level_cell(r, l);
        o << " | " << r.b2 << " | " << r.c1_cubed << " |\n";
    }
    return o.str();
}

std::string to_tsv(const std::vector<TFDRecord>& records) {
    std::ostringstream o;
    o << "case_id\tmodel0\tomega0\teuler_minus2_plus\tz_m2\tz_m1\tz_0\tz_1\tz_2\tb_min\tb_max\tb2\tc1_cubed\tannotation\n";
    for (const auto& r : records) {
        SurfaceModel ext = make_model(extremal_kind(r.b_min));
        o << r.case_id << "\t" << r.model0.name() << "\t" << format_class(r.model0, r.omega0) << "\t"
          << format_class(ext, r.euler_minus2_plus);
        for (int l = -2; l <= 2; ++l) o << "\t" << level_cell(r, l);
        o << "\t" << r.b_min << "\t" << r.b_max << "\t" << r.b2 << "\t" << r.c1_cubed << "\t" << r.annotation << "\n";
    }
    return o.str();
}

}  // namespace tfd
