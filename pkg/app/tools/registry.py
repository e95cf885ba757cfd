from typing import Dict, Type

from app.tools.analysis.analyze_tool import AnalyzeTool
from app.tools.analysis.factor_tool import FactorTool
from app.tools.analysis.newton_tool import NewtonTool
from app.tools.analysis.pitt_tool import PittTool
from app.tools.base_tool import BaseTool
from app.tools.experiments.atoms_tool import AtomsTool
from app.tools.experiments.decay_tool import DecayTool
from app.tools.experiments.fractional_tool import FractionalTool
from app.tools.experiments.vdc_tool import VdcTool
from app.tools.experiments.witness_tool import WitnessTool
from app.tools.suite_tool import SuiteTool

TOOLS: Dict[str, Type[BaseTool]] = {
    "analyze": AnalyzeTool,
    "factor": FactorTool,
    "newton": NewtonTool,
    "decay": DecayTool,
    "vdc": VdcTool,
    "atoms": AtomsTool,
    "pitt": PittTool,
    "fractional": FractionalTool,
    "witness": WitnessTool,
    "suite": SuiteTool,
}


def get_tool(command: str) -> BaseTool:
    return TOOLS[command]()
