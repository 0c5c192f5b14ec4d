#include <gtest/gtest.h>

#include <hrg/graph.hpp>
#include <hrg/io.hpp>
#include <hrg/report.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace hrg;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("hrg_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

std::string coords_text(const PointSet& ps) {
    std::ostringstream out;
    write_coordinates(out, ps);
    return out.str();
}

std::size_t data_error_line(const std::string& coords, const std::string& edges = {}) {
    try {
        std::istringstream in(coords);
        const auto ps = read_coordinates(in);
        std::istringstream ein(edges);
        read_edges(ein, ps.size());
    } catch (const DataError& e) {
        return e.line();
    }
    return static_cast<std::size_t>(-1);
}

const char* const HEADER = "# hrg v1 n=3 alpha=0.75 C=0 R=2.1972245773362196 seed=1 mode=fixed\n";

}  // namespace

TEST(Coordinates, FormatIsExact)
{
    const PointSet ps(ModelParams(2, 0.75, 1.0), {{0.1, 2.0}, {1.0 / 3.0, 0.0}}, SamplingMode::FixedN, 9);
    const std::string expected = "# hrg v1 n=2 alpha=0.75 C=1 R=" + format_double(2.0 * std::log(2.0) + 1.0) +
                                 " seed=9 mode=fixed\n"
                                 "0\t0.10000000000000001\t2\n"
                                 "1\t0.33333333333333331\t0\n";
    EXPECT_EQ(coords_text(ps), expected);
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(Coordinates, RoundTripIsBitExact)
{
    for (auto mode : {SamplingMode::FixedN, SamplingMode::Poisson}) {
        const auto ps = sample(ModelParams(3000, 0.62, -0.7), mode, 5);
        std::istringstream in(coords_text(ps));
        EXPECT_EQ(read_coordinates(in), ps);
    }
    const auto tiny = sample_poisson(ModelParams(5, 0.75, 0.0), 3);
    std::istringstream in(coords_text(tiny));
    EXPECT_EQ(read_coordinates(in).count_method(), "inversion");
}

TEST(Edges, SortedCanonicalLines)
{
    const PointSet ps(ModelParams(4, 0.75, 0.0), {{1, 0}, {1, 1}, {1, 2}, {1, 3}}, SamplingMode::FixedN, 0);
    const std::vector<Edge> edges{{3, 1}, {0, 2}, {1, 0}};
    std::ostringstream out;
    write_edges(out, Graph::from_edges(ps, edges));
    EXPECT_EQ(out.str(), "0\t1\n0\t2\n1\t3\n");
}

TEST(Files, WriteReadRebuildGivesIdenticalGraph)
{
    TempDir dir;
    const auto ps = sample_fixed(ModelParams(5000, 0.75, 0.0), 21);
    const auto g = build_banded(ps);
    save_coordinates(dir / "c.tsv", ps);
    save_edges(dir / "e.tsv", g);
    const auto loaded = load_graph(dir / "c.tsv", dir / "e.tsv");
    EXPECT_EQ(loaded, g);
    EXPECT_EQ(loaded.points(), ps);
    EXPECT_EQ(build_banded(loaded.points()), g);
}

TEST(Files, MissingFilesAreIoErrors)
{
    TempDir dir;
    EXPECT_THROW(load_coordinates(dir / "nope.tsv"), IoError);
    EXPECT_THROW(load_edges(dir / "nope.tsv", 3), IoError);
    const auto ps = sample_fixed(ModelParams(3, 0.75, 0.0), 1);
    EXPECT_THROW(save_coordinates(dir / "missing_dir" / "c.tsv", ps), IoError);
}

TEST(DataErrors, CarryLineNumbers)
{
    const std::string good = std::string(HEADER) + "0\t0.5\t1\n1\t1\t2\n2\t2\t3\n";
    std::istringstream in(good);
    ASSERT_NO_THROW(read_coordinates(in));

    EXPECT_EQ(data_error_line(good, "0\t1\n1\t2\n2\t3\n"), 3u);
    EXPECT_EQ(data_error_line(good, "0\t1\n\n1\t1\n"), 3u);
    EXPECT_EQ(data_error_line(good, "0\t1\n1 2\n"), 2u);
    EXPECT_EQ(data_error_line(good, "0\tx\n"), 1u);
    EXPECT_EQ(data_error_line(good, "0\t1\n1\t2\n"), static_cast<std::size_t>(-1));

    EXPECT_EQ(data_error_line(""), 1u);
    EXPECT_EQ(data_error_line("n=3\n"), 1u);
    EXPECT_EQ(data_error_line("# hrg v1 n=3 alpha=0.75 C=0 R=2.2 seed=1 mode=fixed\n"), 1u);
    EXPECT_EQ(data_error_line("# hrg v1 n=3 alpha=0.75 C=0 seed=1 mode=fixed\n"), 1u);
    EXPECT_EQ(data_error_line(std::string(HEADER) + "0\t0.5\t1\n2\t1\t2\n"), 3u);
    EXPECT_EQ(data_error_line(std::string(HEADER) + "0\t0.5\t1\n1\t9\t2\n"), 3u);
    EXPECT_EQ(data_error_line(std::string(HEADER) + "0\t0.5\t1\n1\t1\t7\n"), 3u);
    EXPECT_EQ(data_error_line(std::string(HEADER) + "0\t0.5\t1\n1\t1\t2\n"), 3u);
}

TEST(Report, FilePipelineEqualsInMemoryPipeline)
{
    TempDir dir;
    const auto ps = sample_fixed(ModelParams(10000, 0.75, 0.0), 13);
    const auto g = build_banded(ps);
    save_coordinates(dir / "c.tsv", ps);
    save_edges(dir / "e.tsv", g);
    const auto loaded = load_graph(dir / "c.tsv", dir / "e.tsv");
    const auto direct = report_json(g, analyze(g));
    const auto from_files = report_json(loaded, analyze(loaded));
    EXPECT_EQ(direct, from_files);
    EXPECT_EQ(direct.dump(), from_files.dump());
}

TEST(Report, FrozenKeys)
{
    const auto g = build_banded(sample_fixed(ModelParams(500, 0.75, 0.0), 2));
    const auto r = report_json(g, analyze(g));
    EXPECT_EQ(r["schema"], 1);
    const std::map<std::string, std::vector<std::string>> keys{
        {"params", {"n", "alpha", "C", "R", "seed", "mode", "in_regime"}},
        {"graph", {"nodes", "edges"}},
        {"components",
         {"count", "sizes", "giant_label", "giant_size", "second_size", "giant_diameter", "max_component_diameter",
          "max_diameter_label"}},
        {"degrees", {"histogram", "mean", "beta_hat", "x_min", "tail_samples", "reliable", "beta_theory", "mean_theory"}},
        {"bands",
         {"inner_c", "inner_radius", "layer_counts", "inner_count", "outer_count", "max_empty_sector_run", "window_k",
          "max_window_nodes", "inner_band_hops"}},
        {"checks", {"core_clique", "core_outside_giant"}},
    };
    EXPECT_EQ(r.size(), keys.size() + 1);
    for (const auto& [section, names] : keys) {
        ASSERT_TRUE(r.contains(section)) << section;
        EXPECT_EQ(r[section].size(), names.size()) << section;
        for (const auto& name : names)
            EXPECT_TRUE(r[section].contains(name)) << section << "." << name;
    }
    for (const char* name : {"inner_nodes", "core_nodes", "max_hops", "pair_bound", "unreachable"})
        EXPECT_TRUE(r["bands"]["inner_band_hops"].contains(name)) << name;
    EXPECT_EQ(r["graph"]["edges"], g.num_edges());

    AnalysisOptions no_diameters;
    no_diameters.diameters = false;
    const auto light = report_json(g, analyze(g, no_diameters));
    EXPECT_TRUE(light["components"]["giant_diameter"].is_null());
}
