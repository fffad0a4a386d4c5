#include <pybind11/pybind11.h>
PYBIND11_MODULE(apoly, m) { m.doc() = "stub"; }
