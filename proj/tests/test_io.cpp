#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "skewexp/io.hpp"
#include "skewexp/matgen.hpp"

using namespace skewexp;

namespace {

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("real matrix file round trip is bit-exact") {
    const AntisymMatrix a = random_antisym(3, MatrixFamily::UNIFORM_REAL, 77);
    const std::string path = tmp_path("skewexp_round.txt");
    write_real_matrix(path, a.dim, a.entries);
    const RealMatrixFile back = read_real_matrix(path);
    CHECK(back.dim == a.dim);
    for (std::size_t k = 0; k < a.entries.size(); ++k) CHECK(back.entries[k] == a.entries[k]);

    // writes are deterministic byte for byte
    const std::string path2 = tmp_path("skewexp_round2.txt");
    write_real_matrix(path2, a.dim, a.entries);
    CHECK(slurp(path) == slurp(path2));
}

TEST_CASE("complex matrix file round trip") {
    ComplexDense m(2);
    m.at(0, 0) = cdouble(0.1234567890123456, -1.0 / 3.0);
    m.at(0, 1) = cdouble(-2.0, 0.5);
    m.at(1, 0) = cdouble(1e-17, 3.0);
    m.at(1, 1) = cdouble(0.0, 0.0);
    const std::string path = tmp_path("skewexp_cplx.txt");
    write_complex_matrix(path, m);
    const ComplexDense back = read_complex_matrix(path);
    REQUIRE(back.dim() == 2);
    for (std::size_t k = 0; k < 4; ++k) CHECK(back.data()[k] == m.data()[k]);
}

TEST_CASE("comments and blank lines are skipped") {
    const std::string path = tmp_path("skewexp_comments.txt");
    {
        std::ofstream out(path);
        out << "# a comment\n\n2\n# another\n0 1\n-1 0\n";
    }
    const RealMatrixFile f = read_real_matrix(path);
    CHECK(f.dim == 2);
    CHECK(f.entries[1] == 1.0);
}

TEST_CASE("parse errors carry the line number") {
    const std::string path = tmp_path("skewexp_bad.txt");
    {
        std::ofstream out(path);
        out << "2\n0 1\n-1 oops\n";
    }
    try {
        read_real_matrix(path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 3);
    }
}

TEST_CASE("truncated files are rejected") {
    const std::string path = tmp_path("skewexp_trunc.txt");
    {
        std::ofstream out(path);
        out << "3\n0 1 1\n";
    }
    CHECK_THROWS_AS(read_real_matrix(path), ParseError);
}

TEST_CASE("loss CSV has the exact header and LF endings") {
    const std::string path = tmp_path("skewexp_losses.csv");
    write_loss_csv(path, {{"run_a", 2, "uniform_real", 7, 0, 0, 3.5},
                          {"run_a", 2, "uniform_real", 7, 0, 1, 1.25}});
    const std::string text = slurp(path);
    CHECK(text == "run_id,n_q,family,seed,restart,iteration,loss\n"
                  "run_a,2,uniform_real,7,0,0,3.5\n"
                  "run_a,2,uniform_real,7,0,1,1.25\n");
}

TEST_CASE("SVG output is self-contained with one polyline per curve") {
    const std::string path = tmp_path("skewexp_plot.svg");
    write_loss_svg(path, "test", {{"a", {3.0, 2.0, 1.0}}, {"b", {2.5, 0.5}}});
    const std::string text = slurp(path);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("iteration") != std::string::npos);
    CHECK(text.find("loss") != std::string::npos);
    std::size_t count = 0;
    for (std::size_t pos = text.find("<polyline"); pos != std::string::npos;
         pos = text.find("<polyline", pos + 1))
        ++count;
    CHECK(count == 2);
    CHECK(text.find("href") == std::string::npos);  // no external assets
}
