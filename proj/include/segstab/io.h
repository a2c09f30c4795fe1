#pragma once

#include <string>

#include "segstab/instance.h"
#include "segstab/solver.h"

namespace segstab {

std::string instance_to_json(const PlaneGraphInstance& inst);
PlaneGraphInstance instance_from_json(const std::string& text);
void save_instance(const PlaneGraphInstance& inst, const std::string& path);
PlaneGraphInstance load_instance(const std::string& path);

std::string solution_to_json(const Solution& sol);
Solution solution_from_json(const std::string& text);
void save_solution(const Solution& sol, const std::string& path);
Solution load_solution(const std::string& path);

}  // namespace segstab
