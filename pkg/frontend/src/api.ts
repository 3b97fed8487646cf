import type { PredictRequest, PredictResponse } from "./types.js";

/** A 400 from the service: one request field is missing or invalid. */
export class FieldValidationError extends Error {
  constructor(
    readonly field: string,
    message: string,
  ) {
    super(message);
    this.name = "FieldValidationError";
  }
}

/** Network failure or 5xx: worth retrying with the same answers. */
export class ServiceUnavailableError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "ServiceUnavailableError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export async function postPrediction(
  baseUrl: string,
  body: PredictRequest,
  fetchImpl: FetchLike = fetch,
): Promise<PredictResponse> {
  let response: Response;
  try {
    response = await fetchImpl(`${baseUrl}/api/predict`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  } catch (err) {
    throw new ServiceUnavailableError(
      `could not reach the prediction service: ${err instanceof Error ? err.message : String(err)}`,
    );
  }
  if (response.status === 400) {
    const payload = await response.json().catch(() => ({}));
    throw new FieldValidationError(
      typeof payload.field === "string" ? payload.field : "",
      typeof payload.error === "string" ? payload.error : "invalid request",
    );
  }
  if (!response.ok) {
    throw new ServiceUnavailableError(`service answered ${response.status}`);
  }
  return (await response.json()) as PredictResponse;
}
