from typing import Any, Dict

from fastapi import HTTPException

from app.errors import InputError


def create_response(data: Any, status_code: int = 200) -> Dict[str, Any]:
    """
    Create a standardized API response.

    Args:
        data: The data to include in the response.
        status_code: The HTTP status code.

    Returns:
        A dictionary with the standardized response structure.
    """
    return {
        "status": "success" if 200 <= status_code < 300 else "error",
        "statusCode": status_code,
        "data": data
    }


def http_error(error: Exception) -> HTTPException:
    """
    Map a failure to an HTTPException.

    Input errors become 400 with the diagnostic; anything else is a 500.
    """
    if isinstance(error, InputError):
        return HTTPException(status_code=400, detail=create_response({"error": str(error)}, 400))
    return HTTPException(status_code=500, detail=f"Error processing request: {str(error)}")
