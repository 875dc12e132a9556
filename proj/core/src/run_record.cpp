#include "perfhom/run_record.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace perfhom {

namespace {

// Shortest round-trip double formatting, locale-independent.
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_run_record_csv(const RunRecord& rec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "step,t,mass_a1,mass_a2,mass_a3,inflow_1,inflow_2,inflow_3,"
           "min_a,L2L2_partial,dt_used\n";
    for (const auto& r : rec.rows) {
        out << r.step << ',' << fmt(r.t);
        for (double m : r.mass) out << ',' << fmt(m);
        for (double f : r.inflow) out << ',' << fmt(f);
        out << ',' << fmt(r.min_a) << ',' << fmt(r.l2l2_partial) << ',' << fmt(r.dt_used)
            << '\n';
    }
}

void write_snapshot(const Snapshot& snap, const Box& box, double epsilon,
                    const std::string& path_prefix) {
    for (int i = 0; i < 3; ++i) {
        const std::string bin = path_prefix + "_a" + std::to_string(i + 1) + ".bin";
        std::ofstream out(bin, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + bin);
        out.write(reinterpret_cast<const char*>(snap.a[i].data()),
                  static_cast<std::streamsize>(snap.a[i].size() * sizeof(double)));
    }
    nlohmann::json j;
    j["t"] = snap.t;
    j["epsilon"] = epsilon;
    j["h"] = box.h;
    j["shape"] = std::vector<std::int64_t>(box.n.begin(), box.n.begin() + box.dim);
    std::ofstream side(path_prefix + ".json", std::ios::binary);
    side << j.dump(2) << '\n';
}

}  // namespace perfhom
