from typing import Any, Dict

from fastapi import APIRouter, status

from repositories.graph_file_repository import (
    format_orientation,
    load,
    parse_graph,
    parse_orientation,
    tree_to_dict,
)
from schemas.pfaffian_schemas import GraphText, PfaffianResult, VerifyRequest
from services.decompose_service import decompose_graph
from services.oracle_service import is_pfaffian_orientation, verify_orientation
from services.orient_service import COMPONENT_DEPTH, pfaffian_orientation
from utils.exceptions import VerificationError
from utils.response_wrapper import api_response, run_service

router = APIRouter(tags=["Pfaffian Orientation"])


def _orient(payload: GraphText) -> PfaffianResult:
    graph = load(parse_graph, payload.text)
    verdict = pfaffian_orientation(graph)
    if not verdict.pfaffian:
        return PfaffianResult(
            pfaffian=False,
            reason=verdict.reason.describe(COMPONENT_DEPTH),
            reason_path=verdict.reason.path,
            tree=tree_to_dict(verdict.tree),
        )
    if payload.verify and verify_orientation(graph, verdict.orientation) is False:
        raise VerificationError("the produced orientation failed the permanent/determinant check")
    return PfaffianResult(
        pfaffian=True,
        orientation=format_orientation(verdict.orientation).splitlines(),
        tree=tree_to_dict(verdict.tree),
    )


def _decompose(text: str) -> Dict[str, Any]:
    return tree_to_dict(decompose_graph(load(parse_graph, text)))


def _verify(payload: VerifyRequest) -> Dict[str, bool]:
    graph = load(parse_graph, payload.graph)
    orientation = parse_orientation(payload.orientation, graph)
    return {"pfaffian": is_pfaffian_orientation(graph, orientation)}


@router.post("/pfaffian", status_code=status.HTTP_200_OK, response_model=None)
async def find_pfaffian_orientation(payload: GraphText) -> Dict[str, Any]:
    """
    Decide whether a bipartite graph has a Pfaffian orientation.

    Args:
        payload: Graph text and whether to verify the answer

    Returns:
        Verdict with orientation lines or the reason for rejection, plus the decomposition tree
    """
    result = await run_service(_orient, payload)
    message = "Pfaffian orientation found" if result.pfaffian else "No Pfaffian orientation"
    return api_response(data=result.model_dump(), message=message)


@router.post("/decompose", status_code=status.HTTP_200_OK, response_model=None)
async def decompose(payload: GraphText) -> Dict[str, Any]:
    """
    Decompose a graph with a perfect matching into braces, after pruning and splitting into components.

    Args:
        payload: Graph text

    Returns:
        The decomposition tree
    """
    tree = await run_service(_decompose, payload.text)
    return api_response(data=tree)


@router.post("/verify", status_code=status.HTTP_200_OK, response_model=None)
async def verify(payload: VerifyRequest) -> Dict[str, Any]:
    result = await run_service(_verify, payload)
    return api_response(data=result, message="PFAFFIAN" if result["pfaffian"] else "NOT-PFAFFIAN")
