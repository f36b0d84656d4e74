"""
apischema helpers for the configuration dataclasses.

Polymorphic configuration fields (the p-rule of a grid point, for instance)
are serialized as single-key objects named after the concrete subclass::

    {"PcMultiple": {"multiple": 3.0}}
"""
from collections.abc import Iterator
from types import new_class
from typing import Any, Dict, TypeVar

from apischema import deserializer, serializer
from apischema.conversions import Conversion
from apischema.tagged_unions import Tagged, TaggedUnion, get_tagged

Cls = TypeVar("Cls", bound=type)


def get_all_subclasses(cls: type) -> Iterator[type]:
    """Recursive implementation of type.__subclasses__"""
    for sub_cls in cls.__subclasses__():
        yield sub_cls
        yield from get_all_subclasses(sub_cls)


def _tagged_union_class(cls: type) -> type:
    annotations: Dict[str, Any] = {
        sub.__name__: Tagged[sub] for sub in get_all_subclasses(cls)
    }
    return new_class(
        cls.__name__,
        (TaggedUnion,),
        exec_body=lambda ns: ns.update({"__annotations__": annotations}),
    )


def as_tagged_union(cls: Cls) -> Cls:
    """
    Tagged union decorator, to be used on the base class.

    Subclasses are collected lazily, the first time the base type is
    (de)serialized, so they may be declared after the base.
    """
    def serialization() -> Conversion:
        tagged_union = _tagged_union_class(cls)
        return Conversion(
            lambda obj: tagged_union(**{obj.__class__.__name__: obj}),
            source=cls,
            target=tagged_union,
            # an inherited conversion would recurse forever
            inherited=False,
        )

    def deserialization() -> Conversion:
        tagged_union = _tagged_union_class(cls)
        return Conversion(
            lambda obj: get_tagged(obj)[1],
            source=tagged_union,
            target=cls,
        )

    deserializer(lazy=deserialization, target=cls)
    serializer(lazy=serialization, source=cls)
    return cls
