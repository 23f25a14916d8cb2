from typing import Any, Dict

from fastapi import APIRouter, status

from repositories.graph_file_repository import (
    load,
    parse_digraph,
    parse_sign_matrix,
    parse_zero_one_matrix,
)
from schemas.apps_schemas import DigraphText, EvennessResult, MatrixText, PolyaResult, SnsResult
from services.apps_service import is_even_digraph, polya_matrix, sign_nonsingular
from utils.response_wrapper import api_response, run_service

router = APIRouter(tags=["Applications"])


def _polya(text: str) -> PolyaResult:
    signed = polya_matrix(load(parse_zero_one_matrix, text))
    return PolyaResult(matrix=None if signed is None else signed.rows())


def _even(text: str) -> EvennessResult:
    verdict = is_even_digraph(load(parse_digraph, text))
    if verdict.even:
        return EvennessResult(even=True)
    weights = verdict.witness.weights
    return EvennessResult(
        even=False,
        weights=[[u + 1, v + 1, weights[(u, v)]] for u, v in verdict.witness.digraph.sorted_arcs()],
    )


def _sns(text: str) -> SnsResult:
    return SnsResult(sns=sign_nonsingular(load(parse_sign_matrix, text)))


@router.post("/polya", status_code=status.HTTP_200_OK, response_model=None)
async def polya(payload: MatrixText) -> Dict[str, Any]:
    """
    Sign a 0/1 matrix so that its determinant equals its permanent.

    Args:
        payload: Matrix text

    Returns:
        The signed matrix, or null when none exists
    """
    result = await run_service(_polya, payload.text)
    return api_response(data=result.model_dump(), message="NONE" if result.matrix is None else "Success")


@router.post("/even", status_code=status.HTTP_200_OK, response_model=None)
async def even(payload: DigraphText) -> Dict[str, Any]:
    """
    Decide whether a digraph is even.

    Args:
        payload: Digraph text

    Returns:
        Verdict with a witness weighting for non-even digraphs
    """
    result = await run_service(_even, payload.text)
    return api_response(data=result.model_dump(), message="EVEN" if result.even else "NOT-EVEN")


@router.post("/sns", status_code=status.HTTP_200_OK, response_model=None)
async def sns(payload: MatrixText) -> Dict[str, Any]:
    result = await run_service(_sns, payload.text)
    return api_response(data=result.model_dump(), message="SNS" if result.sns else "NOT-SNS")
