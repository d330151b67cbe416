#include "ontoforge/ontology.hpp"
#include "ontoforge/util.hpp"

namespace ontoforge::ontology {

namespace {

struct ClassSpec {
  const char* label;
  std::set<std::string> synonyms;
};

struct EdgeSpec {
  RelationKind kind;
  const char* source;
  const char* target;
};

struct PropertySpec {
  const char* owner;
  const char* name;
  ValueKind kind;
  std::set<std::string> synonyms;
};

// Classes in the order the wind-energy taxonomy introduces them.
const std::vector<ClassSpec>& classes() {
  static const std::vector<ClassSpec> kClasses = {
      {"Wind Power Plant", {"WPP", "Wind Plant", "Wind Energy Plant", "Wind Farm"}},
      {"Meteorological Tower", {}},
      {"Wind Turbine", {"Turbine", "Wind Turbine Generator", "WTG", "Generator"}},
      {"Monitoring and Control System", {}},
      {"Forecast System", {}},
      {"Data Logger", {}},
      {"Sensor", {}},
      {"Humidity Sensor", {}},
      {"Pressure Sensor", {}},
      {"Temperature Sensor", {}},
      {"Solar Radiation Sensor", {}},
      {"Wind Profiler", {}},
      {"Wind Vane", {"Weather Vane", "Weather Cock"}},
      {"Anemometer", {}},
      {"Cup Anemometer", {}},
      {"Propeller Anemometer", {}},
      {"Sonic Anemometer", {}},
      {"Meteorological Data", {}},
      {"Wind", {}},
      {"Wind Speed", {}},
      {"Wind Direction", {}},
      {"Vertical Wind Component", {}},
      {"Horizontal Wind Component", {}},
      {"U-component", {}},
      {"V-component", {}},
      {"Wind Shear", {}},
      {"Turbulence", {}},
      {"H-axis Turbine", {}},
      {"V-axis Turbine", {}},
      {"Rotor", {}},
      {"Nacelle", {}},
      {"Tower", {}},
      {"Blade", {}},
      {"Hub", {}},
      {"Gearbox", {}},
      {"Generator", {}},
      {"Wind Power",
       {"Wind Power Generation", "Energy", "Generation", "Wind Energy", "Wind Generation", "Wind Generated Power",
        "Electricity Production"}},
      {"Control System", {}},
      {"DAQ System", {}},
      {"Analysis System", {}},
      {"Turbine Status", {}},
      {"Measured Power", {}},
      {"Power Quality", {}},
      {"Numerical Weather Prediction", {}},
      {"Physical Model", {}},
      {"Statistical Model", {}},
      {"Forecast Power", {}},
  };
  return kClasses;
}

const std::vector<EdgeSpec>& edges() {
  using K = RelationKind;
  static const std::vector<EdgeSpec> kEdges = {
      // Plant components.
      {K::has, "Wind Power Plant", "Meteorological Tower"},
      {K::has, "Wind Power Plant", "Wind Turbine"},
      {K::has, "Wind Power Plant", "Monitoring and Control System"},
      {K::has, "Wind Power Plant", "Forecast System"},
      // Meteorological tower and its sensors.
      {K::has, "Meteorological Tower", "Data Logger"},
      {K::has, "Meteorological Tower", "Sensor"},
      {K::is_a, "Humidity Sensor", "Sensor"},
      {K::is_a, "Pressure Sensor", "Sensor"},
      {K::is_a, "Temperature Sensor", "Sensor"},
      {K::is_a, "Solar Radiation Sensor", "Sensor"},
      {K::is_a, "Wind Profiler", "Sensor"},
      {K::is_a, "Wind Vane", "Sensor"},
      {K::is_a, "Anemometer", "Sensor"},
      {K::is_a, "Cup Anemometer", "Anemometer"},
      {K::is_a, "Propeller Anemometer", "Anemometer"},
      {K::is_a, "Sonic Anemometer", "Anemometer"},
      // Wind and its components.
      {K::has, "Wind", "Wind Speed"},
      {K::has, "Wind", "Wind Direction"},
      {K::has, "Wind", "Vertical Wind Component"},
      {K::has, "Wind", "Horizontal Wind Component"},
      {K::has, "Wind", "Wind Shear"},
      {K::has, "Wind", "Turbulence"},
      {K::has, "Horizontal Wind Component", "U-component"},
      {K::has, "Horizontal Wind Component", "V-component"},
      // Turbines.
      {K::is_a, "H-axis Turbine", "Wind Turbine"},
      {K::is_a, "V-axis Turbine", "Wind Turbine"},
      {K::has, "Wind Turbine", "Rotor"},
      {K::has, "Wind Turbine", "Nacelle"},
      {K::has, "Wind Turbine", "Tower"},
      {K::has, "Rotor", "Blade"},
      {K::has, "Rotor", "Hub"},
      {K::has, "Nacelle", "Gearbox"},
      {K::has, "Nacelle", "Generator"},
      // Monitoring and control.
      {K::has, "Monitoring and Control System", "Control System"},
      {K::has, "Monitoring and Control System", "DAQ System"},
      {K::has, "Monitoring and Control System", "Analysis System"},
      // The five illustrative functional relations.
      {K::generates, "Wind Turbine", "Wind Power"},
      {K::causes, "Wind", "Wind Power"},
      {K::utilizes, "Wind Turbine", "Wind"},
      {K::measures, "Anemometer", "Wind Speed"},
      {K::controls, "Control System", "Wind Power Plant"},
      // Functional relations stated in the class descriptions.
      {K::measures, "Wind Profiler", "Wind Speed"},
      {K::measures, "Wind Profiler", "Wind Direction"},
      {K::measures, "Wind Vane", "Wind Direction"},
      {K::measures, "Sensor", "Meteorological Data"},
      {K::measures, "Monitoring and Control System", "Turbine Status"},
      {K::measures, "Monitoring and Control System", "Measured Power"},
      {K::measures, "Monitoring and Control System", "Power Quality"},
      {K::utilizes, "Forecast System", "Numerical Weather Prediction"},
      {K::utilizes, "Forecast System", "Physical Model"},
      {K::utilizes, "Forecast System", "Statistical Model"},
      {K::generates, "Forecast System", "Forecast Power"},
  };
  return kEdges;
}

const std::vector<PropertySpec>& properties() {
  using V = ValueKind;
  static const std::vector<PropertySpec> kProperties = {
      {"Wind Power Plant", "name", V::text, {}},
      {"Wind Power Plant", "owner", V::text, {}},
      {"Wind Power Plant", "location", V::text, {}},
      {"Wind Power Plant", "license date", V::date, {}},
      {"Wind Power Plant", "number of turbines", V::quantity, {}},
      {"Wind Power Plant", "installed capacity", V::quantity,
       {"rated capacity", "nominal capacity", "maximum effect", "power capacity", "nameplate capacity",
        "wind power capacity"}},
      {"Wind Power Plant", "capacity factor", V::quantity, {"utilisation rate"}},
      {"Wind Power Plant", "voltage level", V::quantity, {}},
      {"Wind Turbine", "model", V::text, {}},
      {"Wind Turbine", "hub height", V::quantity, {}},
      {"Wind Turbine", "swept area", V::quantity, {}},
      {"Wind Turbine", "rated power", V::quantity, {}},
      {"Wind Turbine", "power curve", V::text, {}},
      {"Wind Turbine", "cut-in wind speed", V::quantity, {}},
      {"Wind Turbine", "cut-out wind speed", V::quantity, {}},
      {"Wind Turbine", "rotor diameter", V::quantity, {}},
      {"Wind Turbine", "number of blades", V::quantity, {}},
      {"Wind Speed", "speed", V::quantity, {}},
      {"Wind Speed", "height", V::quantity, {}},
      {"Wind Speed", "date", V::date, {}},
      {"Wind Speed", "wind power plant", V::concept_reference, {}},
  };
  return kProperties;
}

}  // namespace

Ontology seed_wind_ontology() {
  Ontology o;
  // "Generator" is both a class and a Wind Turbine synonym; add_concept
  // reports that as a warning, which the seed accepts.
  for (const ClassSpec& c : classes()) o.add_concept(c.label, c.synonyms);
  for (const EdgeSpec& e : edges()) o.add_relation(e.kind, slugify(e.source), slugify(e.target));
  for (const PropertySpec& p : properties()) o.add_property(slugify(p.owner), PropertyDef{p.name, p.synonyms, p.kind});
  return o;
}

}  // namespace ontoforge::ontology
