// Typed client for the drill service HTTP API.

export type Direction = 'fr-en' | 'en-fr';

export interface DrillNewRequest {
  direction: Direction;
  level: number;
  seed?: number;
}

export interface DrillNewResponse {
  session_id: string;
  source_text: string;
  tokens: string[];
}

export interface DrillCheckResponse {
  correct: boolean;
  expected: string;
  next_allowed: boolean;
  attempts: number;
}

export interface HealthResponse {
  status: string;
  lexicon_counts: Record<string, number>;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class SessionExpiredError extends ApiError {
  constructor(message: string) {
    super(404, message);
  }
}

async function errorDetail(response: Response): Promise<string> {
  try {
    const body = await response.json();
    return typeof body.detail === 'string' ? body.detail : response.statusText;
  } catch {
    return response.statusText;
  }
}

export class DrillApi {
  constructor(
    public baseUrl: string,
    private fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
    });
    if (response.status === 404) {
      throw new SessionExpiredError(await errorDetail(response));
    }
    if (!response.ok) {
      throw new ApiError(response.status, await errorDetail(response));
    }
    return response.json() as Promise<T>;
  }

  newExercise(request: DrillNewRequest): Promise<DrillNewResponse> {
    return this.post<DrillNewResponse>('/drill/new', request);
  }

  check(sessionId: string, answer: string): Promise<DrillCheckResponse> {
    return this.post<DrillCheckResponse>('/drill/check', {
      session_id: sessionId,
      answer,
    });
  }

  async health(): Promise<HealthResponse> {
    const response = await this.fetchFn(`${this.baseUrl}/health`);
    if (!response.ok) {
      throw new ApiError(response.status, await errorDetail(response));
    }
    return response.json() as Promise<HealthResponse>;
  }
}
