#include "vacq/reporting.hpp"

int main(int argc, char** argv) { return vacq::run_cli(argc, argv); }
