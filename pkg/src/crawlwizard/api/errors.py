"""Error envelope and the fixed error-code to HTTP-status mapping."""

from fastapi.responses import JSONResponse

CODE_STATUS = {
    "validation": 400,
    "not_found": 404,
    "upstream_unavailable": 502,
    "corruption": 500,
    "internal": 500,
}


def error_response(code: str, message: str, detail: dict | None = None) -> JSONResponse:
    body: dict = {"code": code, "message": message}
    if detail:
        body["detail"] = detail
    return JSONResponse(status_code=CODE_STATUS[code], content=body)
