// Behavior checks for the lmg command-line tool: exit codes, CSV shape and
// the documented example invocations. Takes the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

int g_failures = 0;
std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, bool capture_stderr = false) {
    const std::string cmd =
        g_cli + " " + args + (capture_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return result;
    char buf[4096];
    while (fgets(buf, sizeof buf, pipe) != nullptr) result.output += buf;
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string first_data_line(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        return line;
    }
    return "";
}

std::string header_line(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') return line;
    }
    return "";
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: lmg_cli_checks <path-to-lmg>\n";
        return 2;
    }
    g_cli = argv[1];

    // help and version exit 0
    expect(run("--help").exit_code == 0, "--help exits 0");
    expect(run("biaxial --help").exit_code == 0, "biaxial --help exits 0");
    expect(run("--version").exit_code == 0, "--version exits 0");

    // usage errors exit 2
    expect(run("biaxial --nope 1 --n 10").exit_code == 2, "unknown flag exits 2");
    expect(run("biaxial --gamma 0.5 --h 2").exit_code == 2, "missing --n exits 2");
    expect(run("biaxial --gamma 0.5 --gamma-min 0 --gamma-max 1 --gamma-steps 3 --h 2 --n 10")
               .exit_code == 2,
           "conflicting axis flags exit 2");
    expect(run("scaling --gamma 0.5 --h 1.0 --n-list 100").exit_code == 2,
           "scaling with one N exits 2");
    expect(run("oracle --model biaxial --hx 0.1 --hz 1 --gamma 0.5 --h 2 --n 8").exit_code == 2,
           "uniaxial flags with biaxial model exit 2");

    // isotropic point: phi_g is exactly pi to printed precision
    {
        const RunResult r = run("biaxial --gamma 1.0 --h 2.0 --n 100");
        expect(r.exit_code == 0, "isotropic single point exits 0");
        expect(contains(r.output, "# lmgphase"), "metadata header present");
        expect(header_line(r.output) ==
                   "gamma,h,N,theta,epsilon,t_sq,phi_g,n_mean,error",
               "biaxial header row");
        expect(contains(first_data_line(r.output), "3.14159265359"),
               "phi_g printed as pi with 12 significant digits");
    }

    // uniaxial single point at the symmetric branch
    {
        const RunResult r = run("uniaxial --hz 2 --hx 0 --n 200");
        expect(r.exit_code == 0, "uniaxial single point exits 0");
        expect(header_line(r.output) ==
                   "h_x,h_z,N,lambda0,y,epsilon,t_sq,phi_g,n_mean,e0,error",
               "uniaxial header row");
        const std::string row = first_data_line(r.output);
        expect(contains(row, "-0.333333333333"), "epsilon = -1/3 in the data row");
        expect(row.rfind("0,2,200,0,1,", 0) == 0, "lambda0 = 0 and y = 1 in the data row");
    }

    // scaling emits fit trailer lines
    {
        const RunResult r = run("scaling --gamma 0.5 --h 1.0 --n-list 100,1000,10000");
        expect(r.exit_code == 0, "scaling exits 0");
        expect(contains(r.output, "# fit: linear slope="), "linear fit line present");
        expect(contains(r.output, "# fit: loglog slope="), "loglog fit line present");
    }

    // oracle with full check
    {
        const RunResult r = run("oracle --model biaxial --gamma 0.5 --h 2.0 --n 8 --full-check");
        expect(r.exit_code == 0, "oracle full-check exits 0");
        expect(contains(header_line(r.output), "sector_e0,full_e0,sector_full_agree"),
               "full-check columns present");
        const std::string row = first_data_line(r.output);
        expect(!row.empty() && row.rfind("biaxial,", 0) == 0, "model column filled");
        expect(contains(row, ",1,"), "sector_full_agree set");
    }

    // every grid point failing -> exit 1 (h <= 0 is rejected per row)
    {
        const RunResult r = run("biaxial --gamma 0.5 --h -1.0 --n 100");
        expect(r.exit_code == 1, "total evaluation failure exits 1");
        expect(contains(r.output, "h must be"), "row carries the error marker");
    }

    // ED columns appear on demand
    {
        const RunResult r = run("biaxial --gamma 0.5 --h 2.0 --n 40 --ed");
        expect(r.exit_code == 0, "--ed exits 0");
        expect(header_line(r.output) ==
                   "gamma,h,N,theta,epsilon,t_sq,phi_g,n_mean,n_mean_ed,gap_ed,error",
               "ed columns appended");
    }

    if (g_failures == 0) {
        std::cout << "cli behavior: all checks passed\n";
        return 0;
    }
    std::cout << "cli behavior: " << g_failures << " checks failed\n";
    return 1;
}
