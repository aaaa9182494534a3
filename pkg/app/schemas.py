from pydantic import BaseModel, ConfigDict, Field, StrictFloat, StrictInt
from typing import List, Optional, Union


class MassEntry(BaseModel):
    """One focal set and its mass, as written in a body document"""

    model_config = ConfigDict(extra="forbid")

    set: List[str] = Field(min_length=1)
    mass: Union[StrictFloat, StrictInt]


class BodyDocument(BaseModel):
    """Body-of-evidence file: universe, optional product factors, masses"""

    model_config = ConfigDict(extra="forbid")

    universe: List[str] = Field(min_length=1)
    product_of: Optional[List[List[str]]] = Field(default=None, min_length=2, max_length=2)
    masses: List[MassEntry] = Field(min_length=1)
