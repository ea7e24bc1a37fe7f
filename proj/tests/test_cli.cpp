/* End-to-end checks of the command-line tool: exit codes, JSON schema,
 * determinism. Takes the binary path as argv[1] and shells out. */

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string out_file = "/tmp/galois_forge_cli_out.txt";
    std::string cmd = env + " " + g_binary + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

void expect(bool cond, const std::string& what) {
    if (cond) {
        std::cout << "ok: " << what << "\n";
    } else {
        std::cout << "FAIL: " << what << "\n";
        ++g_failures;
    }
}

nlohmann::json parse(const std::string& text, const std::string& what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const std::exception&) {
        expect(false, what + " (unparseable JSON)");
        return nlohmann::json::object();
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-galois-forge>\n";
        return 2;
    }
    g_binary = argv[1];

    {
        RunResult r = run("forge --degree 8 --seed 42 --json");
        expect(r.exit_code == 0, "forge d=8 exits 0");
        nlohmann::json j = parse(r.out, "forge d=8 JSON");
        expect(j.value("command", "") == "forge", "command echoed");
        expect(j.value("seed", "") == "42", "seed echoed");
        expect(j.value("ok", false), "ok flag");
        expect(j["certificate"].value("scenic", false), "certificate scenic");
        expect(j["result"].value("scenic", false), "result scenic");
        expect(j.contains("version") && j.contains("params"), "schema keys present");

        RunResult again = run("forge --degree 8 --seed 42 --json");
        expect(again.out == r.out, "byte-identical output for identical inputs");
        RunResult other = run("forge --degree 8 --seed 43 --json");
        expect(other.out != r.out, "different seed changes the result");
    }

    {
        RunResult r = run("forge --degree 7 --seed 1");
        expect(r.exit_code == 1, "odd degree is a usage error");
        RunResult r2 = run("forge");
        expect(r2.exit_code == 1, "missing required flag is a usage error");
    }

    {
        RunResult r = run("forge --degree 8 --paper-example --json");
        expect(r.exit_code == 0, "paper example exits 0");
        nlohmann::json j = parse(r.out, "paper example JSON");
        expect(j["result"].value("f", "") == "133,65,26,85,15,30,24,-10,1",
               "paper example coefficients");
        expect(j["result"].value("k", "") == "4", "paper example k");
        expect(j["result"].value("k_min", "") == "4", "paper example minimal k");
    }

    {
        RunResult env_seed = run("forge --degree 8 --json", "GALOIS_FORGE_SEED=7");
        nlohmann::json j = parse(env_seed.out, "env seed JSON");
        expect(j.value("seed", "") == "7", "seed from environment");
        RunResult flag_wins = run("forge --degree 8 --seed 9 --json", "GALOIS_FORGE_SEED=7");
        nlohmann::json j2 = parse(flag_wins.out, "flag seed JSON");
        expect(j2.value("seed", "") == "9", "flag overrides environment");
    }

    {
        RunResult r = run("verify 133,65,26,85,15,30,24,-10,1");
        expect(r.exit_code == 0, "verify accepts the degree-8 example");
        RunResult r2 = run("verify 1,0,1 --json");
        expect(r2.exit_code == 2, "verify rejects x^2+1");
        nlohmann::json j = parse(r2.out, "verify JSON");
        expect(j.value("ok", true) == false, "verify ok=false");
        RunResult r3 = run("verify 2,2 --json");
        expect(r3.exit_code == 2, "verify rejects non-monic input");
        RunResult r4 = run("verify 1,garbage");
        expect(r4.exit_code == 1, "verify rejects malformed CSV");
    }

    {
        // polynomial from a file
        std::ofstream f("/tmp/galois_forge_poly.txt");
        f << "133, 65, 26, 85, 15, 30, 24, -10, 1\n";
        f.close();
        RunResult r = run("verify /tmp/galois_forge_poly.txt");
        expect(r.exit_code == 0, "verify reads polynomial files");
    }

    {
        RunResult r = run("torus 1,0,1 --json");
        expect(r.exit_code == 0, "torus accepts x^2+1");
        nlohmann::json j = parse(r.out, "torus JSON");
        expect(j.contains("residuals"), "torus residuals present");
        RunResult r2 = run("torus -1,0,1");
        expect(r2.exit_code == 2, "torus rejects real roots with exit 2");
        RunResult r3 = run("torus 133,65,26,85,15,30,24,-10,1 --json");
        expect(r3.exit_code == 0, "torus handles the degree-8 example");
        RunResult flipped = run("torus 133,65,26,85,15,30,24,-10,1 --select 0 --json");
        expect(flipped.exit_code == 0, "torus selection mask accepted");
        expect(flipped.out != r3.out, "selection mask changes the model");
    }

    {
        RunResult one = run("scan 133,65,26,85,15,30,24,-10,1 --prime-bound 2000 --workers 1 --json");
        RunResult two = run("scan 133,65,26,85,15,30,24,-10,1 --prime-bound 2000 --workers 8 --json");
        expect(one.exit_code == 0, "scan exits 0");
        expect(one.out == two.out, "worker count does not change scan output");
        nlohmann::json j = parse(one.out, "scan JSON");
        expect(j["result"].contains("irreducible_fraction"), "scan reports the fraction");
    }

    {
        RunResult r = run("ages --model total-iii --n 4 --json");
        expect(r.exit_code == 0, "ages model exits 0");
        nlohmann::json j = parse(r.out, "ages JSON");
        expect(j["result"].value("classification", "") == "Terminal", "n=4 total-iii terminal");
        RunResult r2 = run("ages --model total-iii --n 1 --json");
        nlohmann::json j2 = parse(r2.out, "ages n=1 JSON");
        expect(j2["result"].value("classification", "") == "CanonicalNotTerminal",
               "n=1 total-iii canonical");
        RunResult r3 = run("ages --model nonsense --n 4");
        expect(r3.exit_code == 1, "bad model name is a usage error");

        std::ofstream f("/tmp/galois_forge_action.json");
        f << "[{\"order\": 2, \"rotations\": [1,1,1]}]";
        f.close();
        RunResult r4 = run("ages --file /tmp/galois_forge_action.json --json");
        expect(r4.exit_code == 0, "ages accepts a JSON action file");
        nlohmann::json j4 = parse(r4.out, "ages file JSON");
        expect(j4["result"].value("classification", "") == "Terminal", "file action terminal");

        std::ofstream bad("/tmp/galois_forge_action_bad.json");
        bad << "{broken";
        bad.close();
        RunResult r5 = run("ages --file /tmp/galois_forge_action_bad.json");
        expect(r5.exit_code == 1, "malformed action JSON is a usage error");

        std::ofstream quasi("/tmp/galois_forge_action_quasi.json");
        quasi << "[{\"order\": 2, \"rotations\": [1,0,0]}]";
        quasi.close();
        RunResult r6 = run("ages --file /tmp/galois_forge_action_quasi.json");
        expect(r6.exit_code == 2, "quasi-reflection refused with exit 2");
    }

    std::cout << (g_failures == 0 ? "all CLI checks passed\n"
                                  : std::to_string(g_failures) + " CLI checks failed\n");
    return g_failures == 0 ? 0 : 1;
}
